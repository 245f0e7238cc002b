from fractions import Fraction

from abx.antiblocking import down_closure, unit_cube
from abx.cbodies import (
    binomial_root_sum,
    cbody_polar,
    join_product_binomial_bound,
    join_volume_product,
    nearly_mahler_check,
    pi_interval,
    sqrt_interval,
)
from abx.records import theorem
from abx.testutils import BasePytest


class TestEnclosure(BasePytest):
    def test_exact_square_roots(self):
        root = sqrt_interval(Fraction(9, 4))
        assert root.low == root.high == Fraction(3, 2)

    def test_irrational_root_is_tight(self):
        root = sqrt_interval(2)
        assert root.low**2 < 2 < root.high**2
        assert root.width < Fraction(1, 2**64)

    def test_pi(self):
        pi = pi_interval()
        assert pi.low > Fraction(314159265358979, 10**14)
        assert pi.high < Fraction(31415926535898, 10**13)

    def test_binomial_bound_is_exact_for_segment(self):
        bound = join_product_binomial_bound(1)
        assert bound.low == bound.high == 4
        assert binomial_root_sum(2).low > Fraction(341, 100)


class TestCayleyPolar(BasePytest):
    def test_simplex(self, simplex2):
        report = cbody_polar(simplex2, simplex2, instance_id="simplex")
        assert report.passed
        assert report.record(theorem.CAYLEY_POLAR).holds
        assert report.record(theorem.CAYLEY_PRODUCT_IDENTITY).slack == 0
        assert not report.record(theorem.CAYLEY_MAHLER_ASYMPTOTIC).asserted

    def test_pentagon_with_box(self, pentagon_body):
        report = cbody_polar(pentagon_body, down_closure([(2, 1)]))
        assert report.passed


def test_join_product_of_simplex(simplex2):
    # Vol(Δ ∨ −Δ) = 2, Vol(□ ∨ −□) = 3
    assert join_volume_product(simplex2) == 6


def test_nearly_mahler_segment_is_tight():
    report = nearly_mahler_check(unit_cube(1))
    assert report.passed
    assert report.values["join_product"] == 4
    assert report.record(theorem.JOIN_PRODUCT_BINOMIAL).equality


def test_nearly_mahler_on_pentagon(pentagon_body):
    assert nearly_mahler_check(pentagon_body).passed
