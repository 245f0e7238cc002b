import random
from fractions import Fraction
from math import comb, factorial

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abx.antiblocking import standard_simplex, unit_cube
from abx.exception import PosetError
from abx.posets import (
    MAX_ORACLE_SIZE,
    DoublePoset,
    Permutation,
    Poset,
    antichain,
    brute_force_linear_extensions,
    chain,
    chain_polytope,
    common_split_extensions,
    count_linear_extensions,
    e_j_double,
    e_j_permutation_oracle,
    e_j_sequence,
    is_linear_extension,
    is_series_parallel,
    is_split_extension,
    poset_from_permutation,
    random_poset,
    stable_set_polytope,
    weak_order_interval,
)

# N: 0 ≺ 2, 1 ≺ 2, 1 ≺ 3; граф сравнимости это путь на четырёх вершинах
N_POSET = Poset.from_relations(4, [(0, 2), (1, 2), (1, 3)])


def test_linear_extensions_of_small_posets(chain3, antichain3):
    assert count_linear_extensions(chain3) == 1
    assert count_linear_extensions(antichain3) == 6
    assert count_linear_extensions(Poset(0, frozenset())) == 1
    assert count_linear_extensions(N_POSET) == 5
    assert brute_force_linear_extensions(N_POSET) == 5


def test_sidorenko_pair_of_example_permutation():
    pi = Permutation.of([2, 1, 3])
    e = count_linear_extensions(poset_from_permutation(pi))
    e_bar = count_linear_extensions(poset_from_permutation(pi.complement()))
    assert (e, e_bar) == (2, 3)
    assert e * e_bar == factorial(3)
    assert weak_order_interval(pi) == (2, 3)


def test_is_linear_extension(chain3):
    assert is_linear_extension(chain3, [0, 1, 2])
    assert not is_linear_extension(chain3, [1, 0, 2])


def test_series_parallel():
    assert is_series_parallel(poset_from_permutation(Permutation.of([2, 1, 3])))
    assert is_series_parallel(chain(4))
    assert is_series_parallel(antichain(4))
    assert not is_series_parallel(N_POSET)
    assert not is_series_parallel(poset_from_permutation(Permutation.of([2, 4, 1, 3])))


@pytest.mark.parametrize(
    "P, expected",
    [
        (chain(3), [1, 3, 3, 1]),
        (antichain(3), [6, 6, 6, 6]),
    ],
)
def test_e_j_for_equal_pair(P, expected):
    assert e_j_sequence(DoublePoset(P, P)) == expected


def test_e_j_for_identity_pair():
    identity = Permutation.identity(2)
    D = DoublePoset.from_permutations(identity, identity)
    D_bar = DoublePoset.from_permutations(identity.complement(), identity.complement())
    assert e_j_double(D, 1) * e_j_double(D_bar, 1) == 4


def test_split_extensions(chain3):
    D = DoublePoset(chain3, chain3)
    # τ[a] это образ элемента a
    assert is_split_extension(D, (1, 2, 3), 2)
    assert is_split_extension(D, (2, 1, 3), 1)
    assert not is_split_extension(D, (2, 1, 3), 2)
    assert [e_j_permutation_oracle(D, j) for j in range(4)] == [1, 3, 3, 1]


def test_common_split_extensions():
    pi, sigma = Permutation.of([2, 1, 3]), Permutation.identity(3)
    for j in range(4):
        assert common_split_extensions(pi, sigma, j) == comb(3, j)


def test_j_out_of_range(chain3):
    with pytest.raises(PosetError):
        e_j_double(DoublePoset(chain3, chain3), 4)
    with pytest.raises(PosetError):
        e_j_permutation_oracle(DoublePoset(chain3, chain3), -1)


def test_oracle_size_limit():
    with pytest.raises(PosetError):
        brute_force_linear_extensions(antichain(MAX_ORACLE_SIZE + 1))


class TestPolytopes:
    def test_chain_polytope_volumes(self, chain3, antichain3):
        assert chain_polytope(chain3).volume == Fraction(1, 6)
        assert chain_polytope(antichain3).volume == 1
        P = poset_from_permutation(Permutation.of([2, 1, 3]))
        assert chain_polytope(P).volume == Fraction(1, 3)

    def test_chain_polytope_shapes(self, chain3, antichain3):
        assert chain_polytope(chain3).body == standard_simplex(3).body
        assert chain_polytope(antichain3).body == unit_cube(3).body

    def test_stable_set_polytopes(self):
        assert stable_set_polytope(nx.empty_graph(3)).body == unit_cube(3).body
        assert stable_set_polytope(nx.complete_graph(3)).body == standard_simplex(3).body

    def test_invalid_inputs(self):
        with pytest.raises(PosetError):
            chain_polytope(Poset(0, frozenset()))
        with pytest.raises(PosetError):
            stable_set_polytope(nx.path_graph([1, 2, 3]))


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=2**16), st.integers(min_value=1, max_value=6))
def test_dynamic_programming_matches_brute_force(seed, n):
    P = random_poset(n, random.Random(seed))
    assert count_linear_extensions(P) == brute_force_linear_extensions(P)


@settings(max_examples=20, deadline=None)
@given(st.permutations(range(1, 5)), st.permutations(range(1, 5)), st.integers(0, 4))
def test_e_j_matches_permutation_oracle(pi, sigma, j):
    D = DoublePoset.from_permutations(Permutation.of(pi), Permutation.of(sigma))
    assert e_j_double(D, j) == e_j_permutation_oracle(D, j)
