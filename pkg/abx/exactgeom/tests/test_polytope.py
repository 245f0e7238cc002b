from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abx.exactgeom import (
    canonical_hull,
    contains_point,
    convex_union,
    embed,
    from_inequalities,
    intersection,
    minkowski_sum,
    negate,
    polar,
    project_section,
    scale,
    translate,
    volume,
)
from abx.exception import DimensionMismatchError, GeometryError, OriginNotInteriorError
from abx.testutils import BasePytest, assert_same_polytope, points

SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]

rational = st.fractions(min_value=-3, max_value=3, max_denominator=8)


def test_canonical_hull_drops_interior_points():
    P = canonical_hull([(0, 0), (1, 0), (0, 1), ("1/2", "1/4")])
    assert P.vertices == points((0, 0), (0, 1), (1, 0))
    assert len(P.facets) == 3
    assert P.equations == ()
    assert P.volume == Fraction(1, 2)


def test_canonical_hull_is_independent_of_input_order():
    assert canonical_hull(SQUARE) == canonical_hull(list(reversed(SQUARE)) + SQUARE)


def test_lower_dimensional_hull():
    P = canonical_hull([(0, 0), (1, 1), (2, 2)])
    assert P.vertices == points((0, 0), (2, 2))
    assert len(P.equations) == 1
    assert not P.is_full_dimensional
    assert volume(P) == 0


def test_empty_input():
    with pytest.raises(GeometryError):
        canonical_hull([])


def test_mixed_dimensions():
    with pytest.raises(DimensionMismatchError):
        canonical_hull([(0, 0), (1, 0, 0)])


class TestVolume(BasePytest):
    def test_tetrahedron(self):
        P = canonical_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
        assert volume(P) == Fraction(1, 6)

    def test_pentagon(self):
        P = canonical_hull([(0, 0), ("3/2", 0), ("3/2", "1/2"), (1, 1), (0, 1)])
        assert volume(P) == Fraction(11, 8)

    def test_hexagon_difference_of_triangles(self):
        triangle = canonical_hull([(0, 0), (1, 0), (0, 1)])
        hexagon = minkowski_sum(triangle, negate(triangle))
        assert len(hexagon.vertices) == 6
        assert volume(hexagon) == 3

    def test_cube(self):
        cube = canonical_hull([(x, y, z) for x in (0, 2) for y in (0, 1) for z in (0, 1)])
        assert volume(cube) == 2


class TestRepresentations(BasePytest):
    def setUp(self):
        self.square = canonical_hull(SQUARE)

    def test_from_inequalities_matches_hull(self):
        P = from_inequalities(
            2,
            [((-1, 0), 0), ((0, -1), 0), ((1, 0), 1), ((0, 1), 1)],
        )
        assert P == self.square

    def test_infeasible_system_is_empty(self):
        P = from_inequalities(1, [((1,), 0), ((-1,), -1)])
        assert P.is_empty

    def test_equations_cut_a_segment(self):
        P = from_inequalities(
            2, [((-1, 0), 0), ((1, 0), 1), ((0, -1), 0), ((0, 1), 1)], [((1, -1), 0)]
        )
        assert P.vertices == points((0, 0), (1, 1))

    def test_intersection(self):
        shifted = translate(self.square, ("1/2", "1/2"))
        assert_same_polytope(
            intersection(self.square, shifted),
            [("1/2", "1/2"), (1, "1/2"), ("1/2", 1), (1, 1)],
        )

    def test_convex_union(self):
        P = convex_union(canonical_hull([(0, 0), (1, 0)]), canonical_hull([(0, 1)]))
        assert volume(P) == Fraction(1, 2)

    def test_contains_point(self):
        assert contains_point(self.square, ("1/2", 1))
        assert not contains_point(self.square, ("1/2", "11/10"))


class TestPolar(BasePytest):
    def test_square_and_cross_polytope(self):
        square = canonical_hull([(x, y) for x in (-1, 1) for y in (-1, 1)])
        cross = polar(square)
        assert_same_polytope(cross, [(1, 0), (-1, 0), (0, 1), (0, -1)])
        assert volume(cross) == 2
        assert polar(cross) == square

    def test_origin_on_boundary(self):
        with pytest.raises(OriginNotInteriorError):
            polar(canonical_hull(SQUARE))


def test_project_section_of_tilted_triangle():
    P = canonical_hull([(0, 0), (2, 0), (0, 1)])
    projection, section = project_section(P, [0])
    assert projection.vertices == points((0,), (2,))
    assert section.vertices == points((0,), (2,))
    projection, section = project_section(P, [1])
    assert projection.vertices == points((0,), (1,))


def test_embed_segment_into_plane():
    P = embed(canonical_hull([(0,), (3,)]), [1], 2)
    assert P.vertices == points((0, 0), (0, 3))


@settings(max_examples=25, deadline=None)
@given(
    st.lists(st.tuples(rational, rational), min_size=3, max_size=7),
    st.tuples(rational, rational),
    st.fractions(min_value=Fraction(1, 4), max_value=3, max_denominator=4),
)
def test_volume_is_affine_covariant(pts, shift, factor):
    P = canonical_hull(pts)
    assert volume(translate(P, shift)) == volume(P)
    assert volume(scale(P, factor)) == factor**2 * volume(P)
    assert volume(negate(P)) == volume(P)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(rational, rational), min_size=1, max_size=6))
def test_hull_vertices_are_inside(pts):
    P = canonical_hull(pts)
    assert all(contains_point(P, p) for p in pts)
