"""
Разрезания K − T и K ∨ (−T) на куски по координатным подпространствам.

Кусок для подпространства E лежит в ортанте σ(E) и после отражения
в R^n_+ равен P_E K × P_{E⊥} T (сумма) или P_E K ∨ P_{E⊥} T (оболочка).
"""

from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterator

from abx.antiblocking.body import (
    AntiBlockingBody,
    LocallyAntiBlockingBody,
    sign_vector_of,
)
from abx.exactgeom import (
    Polytope,
    canonical_hull,
    convex_union,
    minkowski_sum,
    negate,
    volume,
)
from abx.exception import DimensionMismatchError, GeometryError

__all__ = (
    "DecompositionMode",
    "coordinate_subspaces",
    "complement",
    "lift_product",
    "lift_join",
    "decompose_difference",
    "assembled_difference",
    "mixed_volume_ab",
    "projection_volume_products",
)


class DecompositionMode(str, Enum):
    SUM = "sum"
    HULL = "hull"


def coordinate_subspaces(n: int, j: int | None = None) -> Iterator[tuple[int, ...]]:
    """Координатные подпространства (как наборы индексов) по возрастанию размерности"""
    sizes = range(n + 1) if j is None else (j,)
    for size in sizes:
        yield from combinations(range(n), size)


def complement(E: tuple[int, ...], n: int) -> tuple[int, ...]:
    return tuple(i for i in range(n) if i not in E)


def _lift(point: tuple, axes: tuple[int, ...], n: int) -> list[Fraction]:
    full = [Fraction(0)] * n
    for value, axis in zip(point, axes):
        full[axis] = value
    return full


def lift_product(A: Polytope, E: tuple[int, ...], B: Polytope, n: int) -> Polytope:
    """A × B, где A живёт в координатах E, а B в дополнении"""
    F = complement(E, n)
    points = []
    for a in A.vertices:
        for b in B.vertices:
            full = _lift(a, E, n)
            for value, axis in zip(b, F):
                full[axis] = value
            points.append(full)
    return canonical_hull(points)


def lift_join(A: Polytope, E: tuple[int, ...], B: Polytope, n: int) -> Polytope:
    """A ∨ B = conv(A × {0} ∪ {0} × B)"""
    F = complement(E, n)
    points = [_lift(a, E, n) for a in A.vertices]
    points += [_lift(b, F, n) for b in B.vertices]
    return canonical_hull(points)


def _check_same(K: AntiBlockingBody, T: AntiBlockingBody) -> int:
    if K.dim != T.dim:
        raise DimensionMismatchError(
            f"Размерности тел не совпадают: {K.dim} и {T.dim}."
        )
    return K.dim


def assembled_difference(
    K: AntiBlockingBody, T: AntiBlockingBody, mode: DecompositionMode
) -> Polytope:
    """K − T или K ∨ (−T), построенные напрямую"""
    _check_same(K, T)
    if DecompositionMode(mode) == DecompositionMode.SUM:
        return minkowski_sum(K.body, negate(T.body))
    return convex_union(K.body, negate(T.body))


def decompose_difference(
    K: AntiBlockingBody,
    T: AntiBlockingBody,
    mode: DecompositionMode = DecompositionMode.SUM,
) -> LocallyAntiBlockingBody:
    """Разрезание K − T (или K ∨ −T) на 2^n кусков

    Пример:

        decompose_difference(simplex, simplex)
        >>> шестиугольник площади 3 и куски площадей 1/2, 1, 1, 1/2
    """
    n = _check_same(K, T)
    lift = lift_product if DecompositionMode(mode) == DecompositionMode.SUM else lift_join
    pieces = {}
    for E in coordinate_subspaces(n):
        piece = lift(K.projection(E), E, T.projection(complement(E, n)), n)
        pieces[sign_vector_of(E, n)] = AntiBlockingBody.trusted(piece)
    return LocallyAntiBlockingBody(n, assembled_difference(K, T, mode), pieces)


def projection_volume_products(
    K: AntiBlockingBody, T: AntiBlockingBody, j: int
) -> list[Fraction]:
    """Vol_j(P_E K)·Vol_{n−j}(P_{E⊥} T) по всем E размерности j"""
    n = _check_same(K, T)
    return [
        volume(K.projection(E)) * volume(T.projection(complement(E, n)))
        for E in coordinate_subspaces(n, j)
    ]


def mixed_volume_ab(K: AntiBlockingBody, T: AntiBlockingBody, j: int) -> Fraction:
    """V(K[j], −T[n−j]) через объёмы координатных проекций

    Пример:

        mixed_volume_ab(simplex_2, simplex_2, 1)
        >>> Fraction(1, 1)
    """
    n = _check_same(K, T)
    if not 0 <= j <= n:
        raise GeometryError(f"j = {j} вне диапазона [0, {n}].")
    return sum(projection_volume_products(K, T, j), Fraction(0)) / comb(n, j)
