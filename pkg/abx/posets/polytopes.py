"""Цепной многогранник ЧУМ и многогранник устойчивых множеств графа"""

from fractions import Fraction

import networkx as nx

from abx.antiblocking import AntiBlockingBody, down_closure
from abx.exactgeom import from_inequalities, unit_vector
from abx.exception import PosetError
from abx.posets.poset import Poset

__all__ = ("MAX_VOLUME_SIZE", "chain_polytope", "stable_set_polytope")

# Точный объём через триангуляцию
MAX_VOLUME_SIZE = 6


def chain_polytope(P: Poset) -> AntiBlockingBody:
    """C(P) = {x ≥ 0 : Σ_{a ∈ цепи} x_a ≤ 1 для всех максимальных цепей}

    Пример:

        chain_polytope(chain(3)).volume
        >>> Fraction(1, 6)
    """
    if P.n == 0:
        raise PosetError("Цепной многогранник пустого ЧУМ не определён.")
    inequalities = [(tuple(-x for x in unit_vector(P.n, a)), Fraction(0)) for a in range(P.n)]
    for c in P.maximal_chains():
        inequalities.append(
            (tuple(Fraction(int(a in c)) for a in range(P.n)), Fraction(1))
        )
    return AntiBlockingBody.trusted(from_inequalities(P.n, inequalities))


def stable_set_polytope(G: nx.Graph) -> AntiBlockingBody:
    """Stab_G = conv(1_S : S устойчиво) для графа на вершинах 0..n−1"""
    n = G.number_of_nodes()
    if sorted(G.nodes) != list(range(n)):
        raise PosetError("Вершины графа должны быть 0..n−1.")
    if n == 0:
        raise PosetError("Многогранник устойчивых множеств пустого графа не определён.")
    stable = nx.find_cliques(nx.complement(G))
    return down_closure(
        [tuple(Fraction(int(v in S)) for v in range(n)) for S in map(set, stable)]
    )
