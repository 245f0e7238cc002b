"""Независимый оракул смешанного объёма через формулу включений-исключений"""

from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Sequence

from abx.exactgeom.polytope import Polytope, minkowski_sum, scale, volume
from abx.exception import DimensionMismatchError, GeometryError

MAX_ORACLE_DIM = 6

__all__ = ("MAX_ORACLE_DIM", "mixed_volume_oracle", "weighted_sum")


def weighted_sum(bodies: Sequence[Polytope], weights: Sequence[int]) -> Polytope:
    """Σ weights_i · bodies_i для неотрицательных целых весов"""
    result = None
    for body, weight in zip(bodies, weights):
        if weight == 0:
            continue
        term = scale(body, weight) if weight != 1 else body
        result = term if result is None else minkowski_sum(result, term)
    if result is None:
        dim = bodies[0].dim
        return Polytope.point(tuple(Fraction(0) for _ in range(dim)))
    return result


def mixed_volume_oracle(bodies: Sequence[Polytope]) -> Fraction:
    """V(K_1,…,K_n) = (1/n!) Σ_S (−1)^{n−|S|} Vol(Σ_{i∈S} K_i)

    Одинаковые тела склеиваются: подмножество S задаётся кратностями
    различных тел, сумма a копий K считается как aK.
    """
    n = len(bodies)
    if n == 0:
        raise GeometryError("Пустой список тел.")
    if any(body.dim != n for body in bodies):
        raise DimensionMismatchError("Оракулу нужно ровно n тел в R^n.")
    if n > MAX_ORACLE_DIM:
        raise GeometryError(f"Оракул ограничен размерностью {MAX_ORACLE_DIM}.")

    distinct: list[Polytope] = []
    counts: list[int] = []
    for body in bodies:
        if body in distinct:
            counts[distinct.index(body)] += 1
        else:
            distinct.append(body)
            counts.append(1)

    total = Fraction(0)
    for weights in product(*(range(c + 1) for c in counts)):
        size = sum(weights)
        if size == 0:
            continue
        # число подмножеств S с данными кратностями
        multiplicity = 1
        for c, w in zip(counts, weights):
            multiplicity *= comb(c, w)
        sign = -1 if (n - size) % 2 else 1
        total += sign * multiplicity * volume(weighted_sum(distinct, weights))
    return total / factorial(n)
