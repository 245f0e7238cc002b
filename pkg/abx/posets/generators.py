"""Воспроизводимые генераторы ЧУМ и перестановок"""

import random

from abx.posets.poset import Permutation, Poset, antichain, chain

__all__ = ("random_permutation", "random_poset", "standard_posets")


def random_permutation(n: int, rng: random.Random) -> Permutation:
    return Permutation(tuple(rng.sample(range(1, n + 1), n)))


def random_poset(n: int, rng: random.Random) -> Poset:
    """Каждая пара a < b связывается отношением a ≺ b с вероятностью 1/2"""
    relations = [
        (a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.5
    ]
    return Poset.from_relations(n, relations)


def standard_posets(n: int) -> dict[str, Poset]:
    """Цепь и антицепь: граничные экземпляры корпуса"""
    return {"chain": chain(n), "antichain": antichain(n)}
