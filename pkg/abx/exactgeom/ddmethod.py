"""
Метод двойного описания (Motzkin) в целых числах.

Конус задаётся системой A·x ≥ 0 полного ранга, результатом служат
примитивные целые образующие крайних лучей. Смежность лучей
проверяется комбинаторно по множествам обращающихся в ноль строк.
"""

from fractions import Fraction
from typing import Sequence

from abx.exactgeom.linalg import independent_rows, rref
from abx.exactgeom.rational import common_denominator, primitive_vector
from abx.exception import GeometryError

__all__ = ("extreme_rays", "polytope_vertices")


def _idot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _initial_rays(rows: list[tuple[int, ...]], chosen: list[int]) -> list[tuple[int, ...]]:
    """Столбцы обратной матрицы: луч k обнуляет все выбранные строки, кроме k-й"""
    d = len(rows[0])
    square = [list(rows[i]) for i in chosen]
    augmented = [
        [Fraction(x) for x in row] + [Fraction(1 if j == i else 0) for j in range(d)]
        for i, row in enumerate(square)
    ]
    reduced, _ = rref(augmented)
    return [primitive_vector([reduced[r][d + k] for r in range(d)]) for k in range(d)]


def extreme_rays(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Крайние лучи заострённого конуса {x : row·x ≥ 0 для всех строк}"""
    rows = [tuple(int(x) for x in row) for row in rows if any(row)]
    if not rows:
        raise GeometryError("Пустая система неравенств задаёт всё пространство.")
    d = len(rows[0])
    chosen = independent_rows(rows)
    if len(chosen) < d:
        raise GeometryError("Конус не заострён: ранг системы меньше размерности.")

    rays = _initial_rays(rows, chosen)
    zero_sets = [frozenset(c for c in chosen if c != k) for k in chosen]
    chosen_set = set(chosen)

    for index, row in enumerate(rows):
        if index in chosen_set:
            continue
        values = [_idot(row, ray) for ray in rays]
        positive = [i for i, v in enumerate(values) if v > 0]
        negative = [i for i, v in enumerate(values) if v < 0]
        zero = [i for i, v in enumerate(values) if v == 0]
        if not negative:
            zero_sets = [
                z | {index} if values[i] == 0 else z for i, z in enumerate(zero_sets)
            ]
            continue

        new_rays: list[tuple[int, ...]] = []
        new_zero: list[frozenset] = []
        for p in positive:
            for q in negative:
                common = zero_sets[p] & zero_sets[q]
                if len(common) < d - 2:
                    continue
                if any(
                    common <= zero_sets[r]
                    for r in range(len(rays))
                    if r != p and r != q
                ):
                    continue
                vp, vq = values[p], values[q]
                ray = primitive_vector(
                    [vp * b - vq * a for a, b in zip(rays[p], rays[q])]
                )
                new_rays.append(ray)
                new_zero.append(common | {index})

        rays = [rays[i] for i in positive] + [rays[i] for i in zero] + new_rays
        zero_sets = (
            [zero_sets[i] for i in positive]
            + [zero_sets[i] | {index} for i in zero]
            + new_zero
        )
    return sorted(set(rays))


def polytope_vertices(
    dim: int,
    inequalities: Sequence[tuple[Sequence[Fraction], Fraction]],
    equations: Sequence[tuple[Sequence[Fraction], Fraction]] = (),
) -> list[tuple[Fraction, ...]]:
    """Вершины многогранника {⟨a,x⟩ ≤ b} ∩ {⟨c,x⟩ = e}; пустой список для пустого

    Однородная запись: конус {(t,x) : b·t − ⟨a,x⟩ ≥ 0, t ≥ 0},
    вершины это лучи с t > 0.
    """
    homogeneous: list[list[Fraction]] = []
    for normal, offset in inequalities:
        homogeneous.append([Fraction(offset)] + [-Fraction(a) for a in normal])
    for normal, offset in equations:
        homogeneous.append([Fraction(offset)] + [-Fraction(a) for a in normal])
        homogeneous.append([-Fraction(offset)] + [Fraction(a) for a in normal])
    homogeneous.append([Fraction(1)] + [Fraction(0)] * dim)

    integral = []
    for row in homogeneous:
        scale = common_denominator([row])
        integral.append(tuple(int(x * scale) for x in row))

    vertices = []
    for ray in extreme_rays(integral):
        t = ray[0]
        if t == 0:
            raise GeometryError("Система неравенств задаёт неограниченное множество.")
        vertices.append(tuple(Fraction(x, t) for x in ray[1:]))
    return vertices
