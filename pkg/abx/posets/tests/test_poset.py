import random

import pytest

from abx.exception import PosetError
from abx.posets import (
    DoublePoset,
    Permutation,
    Poset,
    antichain,
    chain,
    permutation_from_json,
    permutation_to_json,
    poset_from_json,
    poset_from_permutation,
    poset_to_json,
    random_permutation,
    random_poset,
    standard_posets,
)


def test_transitive_closure():
    P = Poset.from_relations(3, [(0, 1), (1, 2)])
    assert P.less == {(0, 1), (0, 2), (1, 2)}
    assert P == chain(3)
    assert P.cover_relations == ((0, 1), (1, 2))
    assert P.precedes(0, 2) and not P.precedes(2, 0)
    assert P.comparable(2, 0)


@pytest.mark.parametrize(
    "n, relations",
    [
        (-1, []),
        (2, [(0, 2)]),
        (2, [(1, 1)]),
        (3, [(0, 1), (1, 2), (2, 0)]),
    ],
)
def test_invalid_relations(n, relations):
    with pytest.raises(PosetError):
        Poset.from_relations(n, relations)


def test_poset_of_permutation():
    P = poset_from_permutation(Permutation.of([2, 1, 3]))
    assert P.less == {(0, 2), (1, 2)}
    assert P.maximal_chains() == [(0, 2), (1, 2)]
    assert poset_from_permutation(Permutation.identity(3)) == chain(3)
    assert poset_from_permutation(Permutation.reverse(3)) == antichain(3)


def test_shape_predicates(chain3, antichain3):
    assert chain3.is_chain and not chain3.is_antichain
    assert antichain3.is_antichain and not antichain3.is_chain
    assert antichain3.maximal_chains() == [(0,), (1,), (2,)]
    assert chain3.maximal_chains() == [(0, 1, 2)]


def test_graphs(chain3, antichain3):
    assert chain3.comparability_graph().number_of_edges() == 3
    assert chain3.cocomparability_graph().number_of_edges() == 0
    assert antichain3.cocomparability_graph().number_of_edges() == 3
    assert chain3.predecessor_masks == (0, 0b1, 0b11)


def test_restrict(chain3):
    assert chain3.restrict([0, 2]) == chain(2)
    assert chain3.restrict([]) == Poset(0, frozenset())
    P = poset_from_permutation(Permutation.of([2, 1, 3]))
    assert P.restrict([0, 1]) == antichain(2)


class TestPermutation:
    def test_complement(self):
        pi = Permutation.of([2, 1, 3])
        assert pi.complement() == Permutation.of([2, 3, 1])
        assert pi.complement().complement() == pi
        assert str(pi) == "(2,1,3)"

    def test_inversions_and_weak_order(self):
        pi = Permutation.of([2, 1, 3])
        assert pi.inversions == {(2, 1)}
        assert Permutation.identity(3).weak_leq(pi)
        assert pi.weak_leq(Permutation.reverse(3))
        assert not pi.weak_leq(Permutation.of([1, 3, 2]))

    @pytest.mark.parametrize("values", [[1, 1], [0, 1], [1, 3]])
    def test_invalid(self, values):
        with pytest.raises(PosetError):
            Permutation.of(values)


def test_double_poset_sizes():
    with pytest.raises(PosetError):
        DoublePoset(chain(2), chain(3))
    with pytest.raises(PosetError):
        DoublePoset.from_permutations(Permutation.identity(2), Permutation.identity(3))


def test_json_uses_one_based_labels(chain3):
    data = poset_to_json(chain3)
    assert data == {"n": 3, "relations": [[1, 2], [2, 3]]}
    assert poset_from_json(data) == chain3
    assert permutation_to_json(Permutation.of([2, 1, 3])) == {"one_line": [2, 1, 3]}
    assert permutation_from_json({"one_line": [2, 1, 3]}) == Permutation.of([2, 1, 3])


@pytest.mark.parametrize(
    "data",
    [
        {"relations": [[1, 2]]},
        {"n": 2, "relations": [[1]]},
        {"n": 2, "relations": [[0, 1]]},
    ],
)
def test_invalid_poset_json(data):
    with pytest.raises(PosetError):
        poset_from_json(data)


def test_invalid_permutation_json():
    with pytest.raises(PosetError):
        permutation_from_json({})
    with pytest.raises(PosetError):
        permutation_from_json({"one_line": [1, 1]})


def test_generators_are_reproducible():
    assert random_permutation(5, random.Random(3)) == random_permutation(5, random.Random(3))
    P = random_poset(5, random.Random(3))
    assert P == random_poset(5, random.Random(3))
    assert all(a < b for a, b in P.less)
    assert set(standard_posets(4)) == {"chain", "antichain"}
