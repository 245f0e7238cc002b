import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abx.antiblocking import (
    AntiBlockingBody,
    DecompositionMode,
    LocallyAntiBlockingBody,
    abdual,
    assembled_difference,
    decompose_difference,
    down_closure,
    is_box,
    is_reduced_hanner,
    is_simplex,
    mixed_volume_ab,
    random_antiblocking,
    sign_vector_of,
    unconditional_closure,
)
from abx.exactgeom import canonical_hull, volume
from abx.exception import NotAntiBlockingError, NotLocallyAntiBlockingError
from abx.testutils import BasePytest, assert_same_polytope


def test_pentagon_down_closure(pentagon_body):
    assert_same_polytope(
        pentagon_body, [(0, 0), (0, 1), (1, 1), ("3/2", 0), ("3/2", "1/2")]
    )
    assert pentagon_body.volume == Fraction(11, 8)
    assert len(pentagon_body.generators) == 2


def test_down_closure_rejects_negative_points():
    with pytest.raises(NotAntiBlockingError):
        down_closure([(1, -1)])


def test_from_polytope_rejects_non_order_convex():
    with pytest.raises(NotAntiBlockingError):
        AntiBlockingBody.from_polytope(canonical_hull([(0, 0), (1, 0), (1, 1)]))


class TestDuality(BasePytest):
    def test_box_dual_is_triangle(self):
        K = down_closure([(2, 3)])
        assert_same_polytope(abdual(K), [(0, 0), ("1/2", 0), (0, "1/3")])

    def test_simplex_and_cube_are_dual(self, simplex3, cube3):
        assert abdual(simplex3) == cube3
        assert abdual(cube3) == simplex3

    def test_pentagon_dual(self, pentagon_body):
        dual = abdual(pentagon_body)
        assert_same_polytope(dual, [(0, 0), ("2/3", 0), ("1/2", "1/2"), (0, 1)])
        assert dual.volume == Fraction(5, 12)
        assert abdual(dual) == pentagon_body


class TestDecomposition(BasePytest):
    def test_hexagon_pieces(self, simplex2):
        L = decompose_difference(simplex2, simplex2)
        assert L.volume == 3
        assert sorted(p.volume for p in L.pieces.values()) == [
            Fraction(1, 2),
            Fraction(1, 2),
            1,
            1,
        ]
        assert L.pieces[sign_vector_of((0, 1), 2)] == simplex2
        assert L.pieces[sign_vector_of((0,), 2)].volume == 1

    def test_hull_mode_is_cross_polytope(self, simplex2):
        L = decompose_difference(simplex2, simplex2, DecompositionMode.HULL)
        assert L.volume == 2
        assert L.piece_volume_sum() == 2

    def test_mixed_volume(self, simplex2):
        assert mixed_volume_ab(simplex2, simplex2, 1) == 1
        assert mixed_volume_ab(simplex2, simplex2, 0) == Fraction(1, 2)

    def test_pieces_agree_with_direct_difference(self, pentagon_body, simplex2):
        L = decompose_difference(pentagon_body, simplex2)
        assert L.assembled == assembled_difference(
            pentagon_body, simplex2, DecompositionMode.SUM
        )
        L.validate()


class TestLocallyAntiBlocking(BasePytest):
    def test_from_polytope_splits_by_orthant(self):
        square = canonical_hull([(x, y) for x in (-1, 1) for y in (-1, 2)])
        L = LocallyAntiBlockingBody.from_polytope(square)
        assert L.volume == 6
        assert L.piece_volume_sum() == 6

    def test_rejects_non_locally_antiblocking(self):
        with pytest.raises(NotLocallyAntiBlockingError):
            LocallyAntiBlockingBody.from_polytope(
                canonical_hull([(-1, -1), (2, 1), (-1, 1)])
            )

    def test_unconditional_closure_of_simplex(self, simplex2):
        L = unconditional_closure(simplex2)
        assert_same_polytope(L.assembled, [(1, 0), (-1, 0), (0, 1), (0, -1)])
        assert L.volume == 2


def test_shape_predicates(simplex2, cube2, pentagon_body):
    assert is_simplex(simplex2) and not is_box(simplex2)
    assert is_box(cube2) and not is_simplex(cube2)
    assert is_reduced_hanner(simplex2) and is_reduced_hanner(cube2)
    assert not is_reduced_hanner(pentagon_body)
    box = down_closure([(2, 1)])
    assert not is_reduced_hanner(box)
    assert is_reduced_hanner(box, scaled=True)


@settings(max_examples=15, deadline=None)
@given(st.integers(min_value=0, max_value=2**32), st.integers(min_value=1, max_value=3))
def test_random_body_is_full_and_self_bidual(seed, n):
    K = random_antiblocking(n, random.Random(seed))
    assert K.is_full_dimensional
    assert abdual(abdual(K)) == K


@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=0, max_value=2**32))
def test_random_difference_dissection(seed):
    rng = random.Random(seed)
    K, T = random_antiblocking(2, rng), random_antiblocking(2, rng)
    L = decompose_difference(K, T)
    assert L.piece_volume_sum() == volume(L.assembled)
