"""
Линейные продолжения и их смешанные аналоги.

e(P) считается динамикой по порядковым идеалам: число продолжений
идеала I ∪ {x} получает вклад от I, если все предшественники x лежат в I.
"""

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

import networkx as nx

from abx.exception import PosetError
from abx.posets.poset import DoublePoset, Permutation, Poset

__all__ = (
    "MAX_DP_SIZE",
    "MAX_ORACLE_SIZE",
    "count_linear_extensions",
    "brute_force_linear_extensions",
    "is_linear_extension",
    "e_j_double",
    "e_j_sequence",
    "is_split_extension",
    "e_j_permutation_oracle",
    "common_split_extensions",
    "weak_order_interval",
    "is_series_parallel",
)

MAX_DP_SIZE = 20
MAX_ORACLE_SIZE = 8


@lru_cache(maxsize=4096)
def count_linear_extensions(P: Poset) -> int:
    """e(P)

    Пример:

        count_linear_extensions(Poset.from_relations(3, [(0, 2), (1, 2)]))
        >>> 2
    """
    if P.n > MAX_DP_SIZE:
        raise PosetError(f"Динамика по идеалам ограничена размером {MAX_DP_SIZE}.")
    preds = P.predecessor_masks
    counts = {0: 1}
    for _ in range(P.n):
        layer = {}
        for ideal, count in counts.items():
            for x in range(P.n):
                bit = 1 << x
                if not ideal & bit and preds[x] & ideal == preds[x]:
                    layer[ideal | bit] = layer.get(ideal | bit, 0) + count
        counts = layer
    return counts[(1 << P.n) - 1]


def brute_force_linear_extensions(P: Poset) -> int:
    """e(P) перебором топологических сортировок"""
    if P.n > MAX_ORACLE_SIZE:
        raise PosetError(f"Переборный оракул ограничен размером {MAX_ORACLE_SIZE}.")
    if P.n == 0:
        return 1
    return sum(1 for _ in nx.all_topological_sorts(P.graph))


def is_linear_extension(P: Poset, labels: Sequence[int]) -> bool:
    """labels[a] это позиция элемента a; a ≺ b ⇒ labels[a] < labels[b]"""
    return all(labels[a] < labels[b] for a, b in P.less)


def _check_j(n: int, j: int) -> None:
    if not 0 <= j <= n:
        raise PosetError(f"j = {j} вне диапазона [0, {n}].")


def e_j_double(D: DoublePoset, j: int) -> int:
    """e_j(P,Q) = Σ_{|J|=j} e(P|_J)·e(Q|_{J^c})"""
    n = D.n
    _check_j(n, j)
    total = 0
    for J in combinations(range(n), j):
        rest = tuple(a for a in range(n) if a not in J)
        total += count_linear_extensions(D.P.restrict(J)) * count_linear_extensions(
            D.Q.restrict(rest)
        )
    return total


def e_j_sequence(D: DoublePoset) -> list[int]:
    """Коэффициенты E(P,Q;t) = Σ_j e_j(P,Q) t^j"""
    return [e_j_double(D, j) for j in range(D.n + 1)]


def is_split_extension(D: DoublePoset, tau: Sequence[int], j: int) -> bool:
    """L_jτ это продолжение P|_J и R_jτ это продолжение Q|_{J^c}, J = τ⁻¹([j])

    tau[a] ∈ {1, …, n} это образ элемента a.
    """
    left = all(tau[a] < tau[b] for a, b in D.P.less if tau[a] <= j and tau[b] <= j)
    return left and all(
        tau[a] < tau[b] for a, b in D.Q.less if tau[a] > j and tau[b] > j
    )


def _permutations(n: int) -> Iterable[tuple[int, ...]]:
    if n > MAX_ORACLE_SIZE:
        raise PosetError(f"Переборный оракул ограничен размером {MAX_ORACLE_SIZE}.")
    return permutations(range(1, n + 1))


def e_j_permutation_oracle(D: DoublePoset, j: int) -> int:
    """e_j(P,Q) прямым подсчётом по S_n"""
    _check_j(D.n, j)
    return sum(1 for tau in _permutations(D.n) if is_split_extension(D, tau, j))


def common_split_extensions(pi: Permutation, sigma: Permutation, j: int) -> int:
    """Число τ, одновременно расщеплённых для (P_π,P_σ) и (P_π̄,P_σ̄)"""
    D = DoublePoset.from_permutations(pi, sigma)
    D_bar = DoublePoset.from_permutations(pi.complement(), sigma.complement())
    _check_j(D.n, j)
    return sum(
        1
        for tau in _permutations(D.n)
        if is_split_extension(D, tau, j) and is_split_extension(D_bar, tau, j)
    )


def weak_order_interval(pi: Permutation) -> tuple[int, int]:
    """(#[0̂,π], #[π,1̂]) в слабом порядке"""
    below = above = 0
    for values in _permutations(pi.n):
        sigma = Permutation(values)
        below += sigma.weak_leq(pi)
        above += pi.weak_leq(sigma)
    return below, above


def _series_parallel(graph: nx.Graph) -> bool:
    if graph.number_of_nodes() <= 1:
        return True
    parts = list(nx.connected_components(graph))
    if len(parts) == 1:
        parts = list(nx.connected_components(nx.complement(graph)))
        if len(parts) == 1:
            return False
    return all(_series_parallel(graph.subgraph(part).copy()) for part in parts)


def is_series_parallel(P: Poset) -> bool:
    """Разложимость параллельными и последовательными композициями

    Параллельная композиция несвязна в графе сравнимости, последовательная
    несвязна в его дополнении.
    """
    return _series_parallel(P.comparability_graph())

