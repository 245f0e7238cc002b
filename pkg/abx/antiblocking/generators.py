"""Воспроизводимые генераторы anti-blocking тел"""

import random
from fractions import Fraction

from abx.antiblocking.body import AntiBlockingBody, down_closure
from abx.exactgeom import Point

__all__ = (
    "MAX_DENOMINATOR",
    "random_antiblocking",
    "standard_simplex",
    "unit_cube",
    "pentagon",
)

MAX_DENOMINATOR = 16


def _random_point(n: int, rng: random.Random) -> Point:
    point = []
    for _ in range(n):
        denominator = rng.randint(1, MAX_DENOMINATOR)
        point.append(Fraction(rng.randint(0, denominator), denominator))
    return tuple(point)


def random_antiblocking(n: int, rng: random.Random) -> AntiBlockingBody:
    """{U}↓ для m ∈ [n, 2n] случайных точек из [0,1]^n

    Выборка повторяется, пока тело не станет полномерным.
    """
    while True:
        m = rng.randint(n, 2 * n)
        body = down_closure([_random_point(n, rng) for _ in range(m)])
        if body.is_full_dimensional:
            return body


def standard_simplex(n: int) -> AntiBlockingBody:
    """Δ_n = conv{0, e_1, …, e_n}"""
    return down_closure(
        [tuple(Fraction(int(i == k)) for k in range(n)) for i in range(n)]
    )


def unit_cube(n: int) -> AntiBlockingBody:
    return down_closure([tuple(Fraction(1) for _ in range(n))])


def pentagon() -> AntiBlockingBody:
    """{(1,1), (3/2,1/2)}↓ площади 11/8"""
    return down_closure([(1, 1), ("3/2", "1/2")])
