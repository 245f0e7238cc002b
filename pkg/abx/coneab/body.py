"""
C-anti-blocking тела.

Тело K ⊆ C называется C-anti-blocking, если вместе с y ∈ K оно
содержит все x ∈ C с x ⪯ y (y − x ∈ C∨). Собственное тело
записывается как K = {x ∈ C : ⟨w,x⟩ ≤ 1, w ∈ W} с W ⊆ C.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from abx.coneab.cone import PolyhedralCone, cone_to_json
from abx.exactgeom import (
    Point,
    Polytope,
    convex_union,
    dot,
    extreme_rays,
    from_inequalities,
    intersection,
    make_point,
    minkowski_sum,
    polytope_to_json,
    primitive_vector,
)
from abx.exception import ConeError, GeometryError

__all__ = (
    "CABBody",
    "c_down_closure",
    "a_c_dual",
    "cone_operations_closure",
    "hat_difference",
    "cab_to_json",
)


def _check_cone(C: PolyhedralCone) -> None:
    if not (C.is_compatible or C.dual().is_compatible):
        raise ConeError("Нужен конус C ⊆ C∨ или двойственный к такому.")


@dataclass(frozen=True, eq=False)
class CABBody:
    cone: PolyhedralCone
    body: Polytope

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CABBody):
            return NotImplemented
        return self.cone == other.cone and self.body == other.body

    def __hash__(self) -> int:
        return hash((self.cone, self.body))

    @property
    def dim(self) -> int:
        return self.body.dim

    @cached_property
    def w_rep(self) -> tuple[Point, ...]:
        """W из граней с положительной правой частью: ⟨a,x⟩ ≤ b даёт w = a/b"""
        return tuple(
            sorted(
                tuple(x / f.offset for x in f.normal)
                for f in self.body.facets
                if f.offset > 0
            )
        )

    @cached_property
    def proper(self) -> bool:
        """W не лежит ни в одной собственной грани C"""
        W = self.w_rep
        if not W or not self.body.is_full_dimensional:
            return False
        return all(any(dot(a, w) != 0 for w in W) for a in self.cone.facet_normals)

    @cached_property
    def maximal_vertices(self) -> tuple[Point, ...]:
        """⪯-максимальные вершины"""
        V = self.body.vertices
        return tuple(
            v
            for v in V
            if not any(u != v and self.cone.precedes(v, u) for u in V)
        )

    def validate(self) -> None:
        if not all(self.cone.contains(v) for v in self.body.vertices):
            raise ConeError("Тело выходит за пределы конуса.")
        if self.proper and not all(self.cone.contains(w) for w in self.w_rep):
            raise ConeError("Представление W не лежит в конусе.")
        if c_down_closure(self.cone, self.maximal_vertices).body != self.body:
            raise ConeError("Тело не замкнуто вниз относительно порядка конуса.")


def _cone_inequalities(C: PolyhedralCone) -> list[tuple[Point, Fraction]]:
    return [(tuple(Fraction(-x) for x in a), Fraction(0)) for a in C.facet_normals]


def c_down_closure(C: PolyhedralCone, U: Iterable[Sequence]) -> CABBody:
    """{U}↓_C = C ∩ (conv(U) − C∨)

    Неравенства conv(U) − C∨ получаются как крайние лучи конуса
    {(b, w) : b − ⟨w,u⟩ ≥ 0 для u ∈ U, ⟨w,a⟩ ≥ 0 для образующих a конуса C∨}.

    Пример:

        c_down_closure(PolyhedralCone.from_generators([(1, 0), (1, 1)]), [(2, 1)])
        >>> четырёхугольник (0,0), (3/2,3/2), (2,0), (2,1)
    """
    _check_cone(C)
    U = [make_point(u) for u in U]
    if not U:
        raise GeometryError("Пустой набор образующих.")
    if any(len(u) != C.dim for u in U):
        raise ConeError("Размерность точек не совпадает с размерностью конуса.")
    for u in U:
        if not C.contains(u):
            raise ConeError(f"Точка {u} не лежит в конусе.")
    rows = [primitive_vector((Fraction(1),) + tuple(-x for x in u)) for u in U]
    rows += [(0,) + tuple(a) for a in C.facet_normals]
    inequalities = [
        (tuple(Fraction(x) for x in ray[1:]), Fraction(ray[0]))
        for ray in extreme_rays(rows)
        if any(ray[1:])
    ]
    body = from_inequalities(C.dim, inequalities + _cone_inequalities(C))
    return CABBody(C, body)


def a_c_dual(K: CABBody) -> CABBody:
    """A_C K = K° ∩ C = {y ∈ C : ⟨y,v⟩ ≤ 1 для вершин v тела K}"""
    if not K.proper:
        raise ConeError("A_C K неограничено: тело не собственное.")
    C = K.cone
    inequalities = [(v, Fraction(1)) for v in K.body.vertices if any(v)]
    return CABBody(C, from_inequalities(C.dim, inequalities + _cone_inequalities(C)))


def hat_difference(K: CABBody, L: CABBody) -> Polytope:
    """K̂ ∩ (−L̂), где K̂ = {x : ⟨w,x⟩ ≤ 1, w ∈ W_K}

    По отдельности K̂ и L̂ неограничены.
    """
    if K.dim != L.dim:
        raise ConeError("Размерности тел не совпадают.")
    inequalities = [(w, Fraction(1)) for w in K.w_rep]
    inequalities += [(tuple(-x for x in w), Fraction(1)) for w in L.w_rep]
    return from_inequalities(K.dim, inequalities)


def cone_operations_closure(K1: CABBody, K2: CABBody) -> dict[str, bool]:
    """Замкнутость класса C-anti-blocking тел относительно ∩, ∨ и +"""
    if K1.cone != K2.cone:
        raise ConeError("Тела заданы над разными конусами.")
    C = K1.cone
    results = {}
    for name, body in (
        ("intersection", intersection(K1.body, K2.body)),
        ("convex_union", convex_union(K1.body, K2.body)),
        ("minkowski_sum", minkowski_sum(K1.body, K2.body)),
    ):
        try:
            CABBody(C, body).validate()
        except ConeError:
            results[name] = False
        else:
            results[name] = True
    return results


def cab_to_json(K: CABBody, cone_id: str = "C") -> dict:
    data = polytope_to_json(K.body)
    data["cone"] = cone_id
    data["cone_generators"] = cone_to_json(K.cone)["generators"]
    data["W"] = [[str(x) for x in w] for w in K.w_rep]
    return data
