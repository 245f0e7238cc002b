"""
Точная выпуклая оболочка (Quickhull) в целых числах.

Граница хранится как симплициальный комплекс: грань оболочки
задаётся d индексами точек, соседство граней идёт через рёбра
коразмерности два (ridge). Видимость строгая: точка на гиперплоскости
грани этой гранью не видна.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from abx.exactgeom.linalg import hyperplane_normal
from abx.exception import GeometryError

logger = logging.getLogger("abx.exactgeom")

__all__ = ("HullResult", "quickhull")

IntPoint = tuple[int, ...]


@dataclass(frozen=True)
class HullResult:
    """Симплексы границы и их опорные гиперплоскости ⟨normal,x⟩ ≤ offset"""

    simplices: tuple[tuple[int, ...], ...]
    planes: tuple[tuple[tuple[int, ...], int], ...]


class _Facet:
    __slots__ = ("vertices", "normal", "offset", "outside", "alive")

    def __init__(self, vertices: tuple[int, ...], normal: tuple[int, ...], offset: int):
        self.vertices = vertices
        self.normal = normal
        self.offset = offset
        self.outside: list[int] = []
        self.alive = True


def _idot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _initial_simplex(points: Sequence[IntPoint]) -> list[int]:
    """d+1 аффинно независимых точек; сначала пробуем крайние по координатам"""
    d = len(points[0])
    order: list[int] = []
    seen: set[int] = set()
    for axis in range(d):
        for index in (
            min(range(len(points)), key=lambda i: (points[i][axis], points[i])),
            max(range(len(points)), key=lambda i: (points[i][axis], points[i])),
        ):
            if index not in seen:
                seen.add(index)
                order.append(index)
    order.extend(i for i in range(len(points)) if i not in seen)

    chosen = [order[0]]
    base = points[order[0]]
    basis: list[tuple[list[Fraction], int]] = []
    for index in order[1:]:
        vector = [Fraction(a - b) for a, b in zip(points[index], base)]
        for reducer, p in basis:
            if vector[p] != 0:
                factor = vector[p]
                vector = [x - factor * y for x, y in zip(vector, reducer)]
        lead = next((i for i, x in enumerate(vector) if x != 0), None)
        if lead is None:
            continue
        vector = [x / vector[lead] for x in vector]
        basis = [([x - r[lead] * y for x, y in zip(r, vector)], p) for r, p in basis]
        basis.append((vector, lead))
        chosen.append(index)
        if len(chosen) == d + 1:
            return chosen
    raise GeometryError("Точки не порождают полномерную оболочку.")


def quickhull(points: Sequence[IntPoint]) -> HullResult:
    """Оболочка попарно различных целых точек в Z^d, d ≥ 2, полной размерности"""
    d = len(points[0])
    if d < 2:
        raise GeometryError("Quickhull требует размерность не меньше 2.")
    simplex = _initial_simplex(points)
    # Центр масс начального симплекса, умноженный на d+1, остаётся
    # внутренней точкой всех промежуточных оболочек
    weight = d + 1
    interior = tuple(sum(points[i][k] for i in simplex) for k in range(d))

    facets: list[_Facet] = []
    ridges: dict[frozenset, list[_Facet]] = {}

    def make_facet(vertex_ids) -> _Facet:
        vertices = tuple(sorted(vertex_ids))
        normal = hyperplane_normal([points[i] for i in vertices])
        offset = _idot(normal, points[vertices[0]])
        if _idot(normal, interior) > offset * weight:
            normal = tuple(-x for x in normal)
            offset = -offset
        facet = _Facet(vertices, normal, offset)
        facets.append(facet)
        for ridge in combinations(vertices, d - 1):
            ridges.setdefault(frozenset(ridge), []).append(facet)
        return facet

    def assign(index: int, candidates: list[_Facet]) -> None:
        point = points[index]
        for facet in candidates:
            if _idot(facet.normal, point) > facet.offset:
                facet.outside.append(index)
                return

    initial = [make_facet([v for v in simplex if v != omit]) for omit in simplex]
    in_simplex = set(simplex)
    for index in range(len(points)):
        if index not in in_simplex:
            assign(index, initial)

    pending = [f for f in initial if f.outside]
    while pending:
        facet = pending.pop()
        if not facet.alive or not facet.outside:
            continue
        apex = max(
            facet.outside,
            key=lambda i: (_idot(facet.normal, points[i]) - facet.offset, -i),
        )
        apex_point = points[apex]

        visible = [facet]
        visible_ids = {id(facet)}
        stack = [facet]
        while stack:
            current = stack.pop()
            for ridge in combinations(current.vertices, d - 1):
                for neighbour in ridges[frozenset(ridge)]:
                    if id(neighbour) in visible_ids:
                        continue
                    if _idot(neighbour.normal, apex_point) > neighbour.offset:
                        visible_ids.add(id(neighbour))
                        visible.append(neighbour)
                        stack.append(neighbour)

        horizon = []
        for current in visible:
            for ridge in combinations(current.vertices, d - 1):
                key = frozenset(ridge)
                if any(id(other) not in visible_ids for other in ridges[key]):
                    horizon.append(ridge)

        pool = [i for current in visible for i in current.outside if i != apex]
        for current in visible:
            current.alive = False
            current.outside = []
            for ridge in combinations(current.vertices, d - 1):
                key = frozenset(ridge)
                bucket = ridges[key]
                bucket.remove(current)
                if not bucket:
                    del ridges[key]

        created = [make_facet(ridge + (apex,)) for ridge in horizon]
        for index in pool:
            assign(index, created)
        pending.extend(f for f in created if f.outside)

    alive = [f for f in facets if f.alive]
    logger.debug("quickhull: %d точек, %d симплексов границы", len(points), len(alive))
    return HullResult(
        simplices=tuple(f.vertices for f in alive),
        planes=tuple((f.normal, f.offset) for f in alive),
    )
