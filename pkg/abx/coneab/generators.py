"""Воспроизводимые генераторы конусов и C-anti-blocking тел"""

import random
from fractions import Fraction

from abx.antiblocking.generators import MAX_DENOMINATOR
from abx.coneab.body import CABBody, c_down_closure
from abx.coneab.cone import PolyhedralCone, orthant_cone
from abx.exactgeom import Point

__all__ = ("chain_cone", "standard_cones", "random_cone_point", "random_cab")


def chain_cone(n: int) -> PolyhedralCone:
    """cone{e_1, e_1+e_2, …, e_1+…+e_n}; попарные скалярные произведения ≥ 0, значит C ⊆ C∨"""
    return PolyhedralCone.from_generators(
        [tuple(int(k <= i) for k in range(n)) for i in range(n)]
    )


def standard_cones(n: int) -> dict[str, PolyhedralCone]:
    cones = {"orthant": orthant_cone(n)}
    if n >= 2:
        cones["chain"] = chain_cone(n)
    return cones


def random_cone_point(C: PolyhedralCone, rng: random.Random) -> Point:
    """Неотрицательная рациональная комбинация образующих с коэффициентами из [0,1]"""
    point = [Fraction(0)] * C.dim
    for g in C.generators:
        denominator = rng.randint(1, MAX_DENOMINATOR)
        weight = Fraction(rng.randint(0, denominator), denominator)
        for k, x in enumerate(g):
            point[k] += weight * x
    return tuple(point)


def random_cab(C: PolyhedralCone, rng: random.Random) -> CABBody:
    """{U}↓_C для m ∈ [n, 2n] случайных точек конуса; повтор до собственного тела"""
    n = C.dim
    while True:
        m = rng.randint(n, 2 * n)
        body = c_down_closure(C, [random_cone_point(C, rng) for _ in range(m)])
        if body.proper:
            return body
