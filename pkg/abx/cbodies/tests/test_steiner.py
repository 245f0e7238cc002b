from fractions import Fraction

import pytest

from abx.cbodies import (
    iterated_symmetral,
    steiner_monotonicity_check,
    steiner_symmetral,
    steiner_volume_check,
)
from abx.exactgeom import canonical_hull, volume
from abx.exception import GeometryError
from abx.records import theorem
from abx.testutils import assert_same_polytope


def test_symmetral_of_triangle(simplex2):
    S = steiner_symmetral(simplex2, 1)
    assert_same_polytope(S, [(0, "-1/2"), (0, "1/2"), (1, 0)])
    assert volume(S) == Fraction(1, 2)


def test_zero_parameter_keeps_body(pentagon_body):
    assert steiner_symmetral(pentagon_body, 0, 0) == pentagon_body.body


def test_axis_must_be_closed():
    with pytest.raises(GeometryError):
        steiner_symmetral(canonical_hull([(0, 1), (1, 1), (0, 2)]), 1)


def test_volume_is_preserved(pentagon_body):
    assert steiner_volume_check(pentagon_body, 1).passed


def test_iterated_symmetral_of_cube(cube2):
    body, report = iterated_symmetral(cube2)
    assert_same_polytope(body, [(x, y) for x in ("-1/2", "1/2") for y in ("-1/2", "1/2")])
    assert report.record(theorem.ITERATED_SYMMETRAL).holds


def test_iterated_symmetral_of_pentagon(pentagon_body):
    _, report = iterated_symmetral(pentagon_body)
    assert report.passed


def test_mixed_volumes_decrease(pentagon_body, simplex2):
    report = steiner_monotonicity_check(pentagon_body, simplex2, 0)
    assert report.passed
    assert len(report.records) == 3
