import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from abx.antiblocking import (
    DecompositionMode,
    assembled_difference,
    closure_check,
    decomposition_check,
    godbersen_check,
    locally_ab_polar,
    random_antiblocking,
    reverse_kleitman_check,
    rogers_shephard_check,
    saint_raymond_multi,
    saint_raymond_products,
    sandwich_check,
    unit_cube,
)
from abx.antiblocking.body import LocallyAntiBlockingBody
from abx.records import Relation, theorem
from abx.testutils import BasePytest


class TestGodbersen(BasePytest):
    def test_simplex_attains_upper_bound(self, simplex3):
        report = godbersen_check(simplex3, "simplex")
        assert report.passed
        assert report.flags["upper_equality"]
        assert not report.flags["lower_equality"]
        assert report.flags["upper_equality_matches"]
        assert report.values["V_1"] == Fraction(1, 2)

    def test_cube_attains_lower_bound(self, cube3):
        report = godbersen_check(cube3, "cube")
        assert report.passed
        assert report.flags["lower_equality"]
        assert not report.flags["upper_equality"]
        assert all(r.equality for r in report.by_theorem(theorem.GODBERSEN_LOWER))

    def test_pentagon_is_strict(self, pentagon_body):
        report = godbersen_check(pentagon_body)
        assert report.passed
        assert not report.flags["upper_equality"]
        assert not report.flags["lower_equality"]


class TestSaintRaymond(BasePytest):
    def test_simplex_is_equality(self, simplex3):
        report = saint_raymond_products(simplex3, simplex3, instance_id="s")
        record = report.record(theorem.SAINT_RAYMOND)
        assert record.lhs == Fraction(1, 6)
        assert record.equality
        assert report.flags["sr_equality_matches"]

    def test_pentagon_slack(self, pentagon_body):
        report = saint_raymond_products(pentagon_body, pentagon_body, 1)
        record = report.record(theorem.SAINT_RAYMOND)
        assert record.lhs == Fraction(55, 96)
        assert record.slack == Fraction(7, 96)
        assert not record.equality
        assert report.passed

    def test_mixed_multi_bodies(self, pentagon_body, simplex2):
        report = saint_raymond_multi([pentagon_body], [simplex2])
        assert report.passed
        assert report.records[0].rhs == 1


def test_reverse_kleitman_with_delta(pentagon_body, simplex2):
    report = reverse_kleitman_check(pentagon_body, simplex2, with_delta=True)
    assert report.passed
    same = report.record(theorem.ORDER_CONVEX_DIFFERENCE)
    assert same.relation == Relation.SAME and same.holds


def test_decomposition_check_on_hexagon(simplex2):
    report = decomposition_check(simplex2, simplex2, "hexagon")
    assert report.passed
    assert report.record(theorem.DIFFERENCE_DISSECTION).lhs == 3
    assert report.record(theorem.HULL_DISSECTION).lhs == 2


def test_closure(pentagon_body, simplex2):
    assert closure_check(pentagon_body, simplex2) == {
        "intersection": True,
        "convex_union": True,
        "minkowski_sum": True,
    }


def test_sandwich_for_simplex(simplex2):
    report = sandwich_check(simplex2, [0])
    assert report.passed
    assert report.record(theorem.SANDWICH_INNER).equality
    assert report.record(theorem.SANDWICH_OUTER).lhs == 1


def test_rogers_shephard_on_hexagon(simplex2):
    hexagon = assembled_difference(simplex2, simplex2, DecompositionMode.SUM)
    report = rogers_shephard_check(hexagon, [0])
    assert report.passed


def test_locally_ab_polar_of_square():
    cube = unit_cube(2)
    square = LocallyAntiBlockingBody.from_polytope(
        assembled_difference(cube, cube, DecompositionMode.SUM)
    )
    polar_body, report = locally_ab_polar(square, "square")
    assert polar_body.volume == 2
    assert report.passed
    mahler = report.record(theorem.LOCAL_MAHLER)
    assert mahler.lhs == 8 and mahler.equality
    assert report.flags["equality_matches"]


@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=0, max_value=2**32))
def test_random_bodies_pass_all_checks(seed):
    rng = random.Random(seed)
    K, T = random_antiblocking(2, rng), random_antiblocking(2, rng)
    for report in (
        godbersen_check(K),
        saint_raymond_products(K, T),
        reverse_kleitman_check(K, T, with_delta=True),
        decomposition_check(K, T),
    ):
        assert report.passed
