"""
Частично упорядоченные множества, перестановки и двойные ЧУМ.

Элементы ЧУМ внутри пакета нумеруются с нуля. В JSON и в записи
перестановок используются метки 1..n, как в математической нотации.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

from abx.exception import PosetError

__all__ = (
    "Poset",
    "Permutation",
    "DoublePoset",
    "chain",
    "antichain",
    "poset_from_permutation",
    "poset_to_json",
    "poset_from_json",
    "permutation_to_json",
    "permutation_from_json",
)

Relation = tuple[int, int]


@dataclass(frozen=True)
class Poset:
    """Строгий порядок `less` на {0, …, n−1}, транзитивно замкнутый"""

    n: int
    less: frozenset[Relation]

    @classmethod
    def from_relations(cls, n: int, relations: Iterable[Sequence[int]]) -> "Poset":
        """ЧУМ по образующим отношениям a ≺ b с транзитивным замыканием

        Пример:

            Poset.from_relations(3, [(0, 1), (1, 2)]).less
            >>> frozenset({(0, 1), (0, 2), (1, 2)})
        """
        if n < 0:
            raise PosetError(f"Отрицательный размер ЧУМ: {n}.")
        graph = nx.DiGraph()
        graph.add_nodes_from(range(n))
        for a, b in relations:
            if not (0 <= a < n and 0 <= b < n):
                raise PosetError(f"Отношение ({a}, {b}) вне множества [0, {n}).")
            if a == b:
                raise PosetError(f"Отношение {a} ≺ {a} нарушает иррефлексивность.")
            graph.add_edge(a, b)
        if not nx.is_directed_acyclic_graph(graph):
            raise PosetError("Отношения содержат цикл.")
        closure = nx.transitive_closure_dag(graph)
        return cls(n, frozenset(closure.edges()))

    @cached_property
    def graph(self) -> nx.DiGraph:
        """Орграф отношения ≺ (уже транзитивно замкнутый)"""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.less)
        return graph

    @cached_property
    def cover_relations(self) -> tuple[Relation, ...]:
        return tuple(sorted(nx.transitive_reduction(self.graph).edges()))

    def precedes(self, a: int, b: int) -> bool:
        return (a, b) in self.less

    def comparable(self, a: int, b: int) -> bool:
        return (a, b) in self.less or (b, a) in self.less

    @cached_property
    def predecessor_masks(self) -> tuple[int, ...]:
        """Битовая маска строгих предшественников каждого элемента"""
        masks = [0] * self.n
        for a, b in self.less:
            masks[b] |= 1 << a
        return tuple(masks)

    def comparability_graph(self) -> nx.Graph:
        """G(P): рёбра между сравнимыми элементами"""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.less)
        return graph

    def cocomparability_graph(self) -> nx.Graph:
        return nx.complement(self.comparability_graph())

    def maximal_chains(self) -> list[tuple[int, ...]]:
        """Максимальные цепи: пути диаграммы Хассе от минимальных к максимальным"""
        cover = nx.DiGraph()
        cover.add_nodes_from(range(self.n))
        cover.add_edges_from(self.cover_relations)
        sources = [v for v in cover if cover.in_degree(v) == 0]
        sinks = {v for v in cover if cover.out_degree(v) == 0}
        chains = []
        for s in sources:
            if s in sinks:
                chains.append((s,))
                continue
            for t in sinks:
                chains.extend(tuple(p) for p in nx.all_simple_paths(cover, s, t))
        return sorted(chains)

    def restrict(self, J: Iterable[int]) -> "Poset":
        """P|_J с сохраняющей порядок перенумерацией в {0, …, |J|−1}"""
        J = sorted(set(J))
        index = {a: i for i, a in enumerate(J)}
        return Poset(
            len(J),
            frozenset(
                (index[a], index[b]) for a, b in self.less if a in index and b in index
            ),
        )

    @property
    def is_chain(self) -> bool:
        return len(self.less) == self.n * (self.n - 1) // 2

    @property
    def is_antichain(self) -> bool:
        return not self.less


def chain(n: int) -> Poset:
    """C_n: 0 ≺ 1 ≺ … ≺ n−1"""
    return Poset(n, frozenset((a, b) for a in range(n) for b in range(a + 1, n)))


def antichain(n: int) -> Poset:
    return Poset(n, frozenset())


@dataclass(frozen=True)
class Permutation:
    """Перестановка в однострочной записи π_1 … π_n со значениями 1..n"""

    one_line: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.one_line) != list(range(1, len(self.one_line) + 1)):
            raise PosetError(f"{list(self.one_line)} не является перестановкой.")

    @classmethod
    def of(cls, values: Iterable[int]) -> "Permutation":
        return cls(tuple(int(v) for v in values))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def reverse(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @property
    def n(self) -> int:
        return len(self.one_line)

    def complement(self) -> "Permutation":
        """π̄_a = n + 1 − π_a"""
        return Permutation(tuple(self.n + 1 - x for x in self.one_line))

    @cached_property
    def inversions(self) -> frozenset[tuple[int, int]]:
        """I(π) = {(π_i, π_j) : i < j, π_i > π_j}"""
        pi = self.one_line
        return frozenset(
            (pi[i], pi[j])
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if pi[i] > pi[j]
        )

    def weak_leq(self, other: "Permutation") -> bool:
        """self ≤ other в слабом порядке Брюа: I(self) ⊆ I(other)"""
        return self.inversions <= other.inversions

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.one_line)) + ")"


def poset_from_permutation(pi: Permutation) -> Poset:
    """P_π: a ≺ b ⇔ a < b и π_a < π_b

    Пример:

        poset_from_permutation(Permutation.of([2, 1, 3])).less
        >>> frozenset({(0, 2), (1, 2)})
    """
    values = pi.one_line
    return Poset(
        pi.n,
        frozenset(
            (a, b)
            for a in range(pi.n)
            for b in range(a + 1, pi.n)
            if values[a] < values[b]
        ),
    )


@dataclass(frozen=True)
class DoublePoset:
    P: Poset
    Q: Poset

    def __post_init__(self):
        if self.P.n != self.Q.n:
            raise PosetError(
                f"ЧУМ двойной пары разного размера: {self.P.n} и {self.Q.n}."
            )

    @property
    def n(self) -> int:
        return self.P.n

    @classmethod
    def from_permutations(cls, pi: Permutation, sigma: Permutation) -> "DoublePoset":
        if pi.n != sigma.n:
            raise PosetError(f"Перестановки разной длины: {pi.n} и {sigma.n}.")
        return cls(poset_from_permutation(pi), poset_from_permutation(sigma))


def poset_to_json(P: Poset) -> dict:
    """Накрывающие пары с метками 1..n"""
    return {"n": P.n, "relations": [[a + 1, b + 1] for a, b in P.cover_relations]}


def poset_from_json(data: dict) -> Poset:
    try:
        n = int(data["n"])
        relations = [(int(a) - 1, int(b) - 1) for a, b in data.get("relations", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise PosetError(f"Некорректный JSON ЧУМ: {exc}")
    return Poset.from_relations(n, relations)


def permutation_to_json(pi: Permutation) -> dict:
    return {"one_line": list(pi.one_line)}


def permutation_from_json(data: dict) -> Permutation:
    try:
        return Permutation.of(data["one_line"])
    except (KeyError, TypeError, ValueError) as exc:
        raise PosetError(f"Некорректный JSON перестановки: {exc}")
