import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abx.antiblocking import random_antiblocking, unit_cube
from abx.cbodies import (
    cayley,
    cayley_dissection_check,
    cayley_slice,
    cbody_volume_identity,
    shadow_invariance,
    slice_check,
)
from abx.exactgeom import volume
from abx.exception import GeometryError
from abx.records import theorem
from abx.testutils import BasePytest, assert_same_polytope


def test_parallelogram_of_unit_segments():
    C = cayley(unit_cube(1), unit_cube(1))
    assert_same_polytope(C.body, [(-1, -1), (0, -1), (0, 1), (1, 1)])
    assert C.volume == 2


def test_lambda_out_of_range(simplex2):
    with pytest.raises(GeometryError):
        cayley(simplex2, simplex2, 2)


class TestCayleyVolume(BasePytest):
    def test_identity_for_simplex(self, simplex2):
        report = cbody_volume_identity(simplex2, simplex2, "simplex")
        record = report.record(theorem.CAYLEY_VOLUME)
        assert record.lhs == Fraction(4, 3)
        assert record.slack == 0

    def test_middle_slice_is_half_difference(self, simplex2):
        section = cayley_slice(cayley(simplex2, simplex2), 0)
        assert volume(section) == Fraction(3, 4)

    def test_slices(self, pentagon_body, simplex2):
        report = slice_check(pentagon_body, simplex2, ("-1/2", 0, "1/2", 1))
        assert report.passed
        assert len(report.records) == 4

    def test_shadow_system_keeps_volume(self, pentagon_body, simplex2):
        report = shadow_invariance(pentagon_body, simplex2)
        assert report.passed
        assert len(set(report.values.values())) == 1

    def test_dissection(self, pentagon_body, simplex2):
        report = cayley_dissection_check(pentagon_body, simplex2)
        assert report.passed
        assert report.values["pieces"] == 4


@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=0, max_value=2**32))
def test_random_cayley_identities(seed):
    rng = random.Random(seed)
    K, T = random_antiblocking(2, rng), random_antiblocking(2, rng)
    for report in (
        cbody_volume_identity(K, T),
        slice_check(K, T, (0, "1/3")),
        cayley_dissection_check(K, T),
    ):
        assert report.passed
