import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abx.exception import PosetError
from abx.posets import (
    DoublePoset,
    Permutation,
    Poset,
    antichain,
    chain,
    chain_volume_check,
    ej_mixed_volume_check,
    ej_sequence_props,
    extensions_oracle_check,
    random_poset,
    sidorenko_suite,
    stable_set_duality_check,
)
from abx.records import theorem

N_POSET = Poset.from_relations(4, [(0, 2), (1, 2), (1, 3)])


class TestSidorenko:
    def test_series_parallel_equality(self):
        report = sidorenko_suite(Permutation.of([2, 1, 3]), Permutation.identity(3), 1, "sp")
        assert report.passed
        record = report.record(theorem.SIDORENKO)
        assert (record.lhs, record.rhs) == (6, 6)
        assert record.equality
        assert report.flags["series_parallel"]
        assert report.flags["sidorenko_equality"]
        assert report.flags["equality_matches"]
        assert report.values["e"] == 2
        assert report.values["e_complement"] == 3
        assert report.record(theorem.WEAK_ORDER_EXTENSIONS).lhs == 2

    def test_strict_inequality(self):
        report = sidorenko_suite(Permutation.of([2, 4, 1, 3]), Permutation.identity(4), 2)
        assert report.passed
        record = report.record(theorem.SIDORENKO)
        assert (record.lhs, record.rhs) == (25, 24)
        assert not report.flags["series_parallel"]
        assert report.flags["equality_matches"]

    def test_mixed_identity_pair(self):
        identity = Permutation.identity(2)
        report = sidorenko_suite(identity, identity, 1)
        record = report.record(theorem.MIXED_SIDORENKO)
        assert (record.lhs, record.rhs) == (4, 4)
        assert report.flags["mixed_equality"]

    def test_invalid_arguments(self):
        with pytest.raises(PosetError):
            sidorenko_suite(Permutation.identity(3), Permutation.identity(2), 1)
        with pytest.raises(PosetError):
            sidorenko_suite(Permutation.identity(3), Permutation.identity(3), 4)


def test_chain_volume_check():
    report = chain_volume_check(N_POSET, "n")
    assert report.passed
    assert report.values["e"] == 5
    assert report.record(theorem.CHAIN_VOLUME).rhs == 5
    with pytest.raises(PosetError):
        chain_volume_check(antichain(7))


def test_extensions_oracle_check(chain3):
    assert extensions_oracle_check(chain3).passed
    assert extensions_oracle_check(N_POSET).record(theorem.EXTENSIONS_ORACLE).lhs == 5


@pytest.mark.parametrize("values", [[2, 1, 3], [2, 4, 1, 3], [1, 2, 3, 4]])
def test_stable_set_duality(values):
    report = stable_set_duality_check(Permutation.of(values))
    assert report.passed
    assert len(report.by_theorem(theorem.STABLE_SET_DUALITY)) == 2


class TestSequence:
    def test_chain(self, chain3):
        report = ej_sequence_props(DoublePoset(chain3, chain3))
        assert report.passed
        assert [report.values[f"e_{j}"] for j in range(4)] == [1, 3, 3, 1]
        assert report.flags["is_chain"]
        assert report.flags["upper_equality_matches"]
        assert report.flags["lower_equality_matches"]

    def test_antichain(self, antichain3):
        report = ej_sequence_props(DoublePoset(antichain3, antichain3))
        assert report.passed
        assert [report.values[f"e_{j}"] for j in range(4)] == [6, 6, 6, 6]
        assert report.flags["is_antichain"]
        assert all(r.equality for r in report.by_theorem(theorem.EJ_LOWER))

    def test_distinct_posets_skip_palindrome(self, chain3, antichain3):
        report = ej_sequence_props(DoublePoset(chain3, antichain3))
        assert report.passed
        assert not report.by_theorem(theorem.EJ_PALINDROMIC)
        assert "is_chain" not in report.flags
        assert len(report.by_theorem(theorem.EJ_ANTICHAIN_FACTOR)) == 4

    def test_mixed_volumes(self, chain3):
        assert ej_mixed_volume_check(DoublePoset(chain3, chain(3))).passed
        assert ej_mixed_volume_check(DoublePoset(N_POSET, antichain(4))).passed
        with pytest.raises(PosetError):
            ej_mixed_volume_check(DoublePoset(chain(7), chain(7)))


@settings(max_examples=15, deadline=None)
@given(st.permutations(range(1, 5)), st.permutations(range(1, 5)), st.integers(0, 4))
def test_random_sidorenko(pi, sigma, j):
    assert sidorenko_suite(Permutation.of(pi), Permutation.of(sigma), j).passed


@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=0, max_value=2**16))
def test_random_sequence_props(seed):
    rng = random.Random(seed)
    P = random_poset(4, rng)
    assert ej_sequence_props(DoublePoset(P, P)).passed
    assert ej_sequence_props(DoublePoset(P, random_poset(4, rng))).passed
