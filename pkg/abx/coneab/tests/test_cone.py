import pytest

from abx.coneab import PolyhedralCone, chain_cone, cone_from_json, cone_to_json, orthant_cone
from abx.exception import ConeError


def test_chain_cone_normals(chain_cone2):
    assert chain_cone2.generators == ((1, 0), (1, 1))
    assert chain_cone2.facet_normals == ((0, 1), (1, -1))
    assert chain_cone2 == PolyhedralCone.from_generators([(2, 2), (3, 0), (1, 0)])


def test_compatibility(chain_cone2, orthant3):
    assert chain_cone2.is_compatible
    assert not chain_cone2.dual().is_compatible
    assert chain_cone2.dual().dual() == chain_cone2
    assert orthant3.is_compatible
    assert orthant3.dual() == orthant3


def test_from_normals_matches_dual(chain_cone2):
    assert PolyhedralCone.from_normals([(0, 1), (1, -1)]) == chain_cone2
    assert PolyhedralCone.from_normals(chain_cone2.generators) == chain_cone2.dual()


def test_contains_and_order(chain_cone2):
    assert chain_cone2.contains((2, 1))
    assert chain_cone2.contains(("3/2", "3/2"))
    assert not chain_cone2.contains((0, 1))
    # (2,1) − (3/2,3/2) = (1/2,−1/2) лежит в C∨
    assert chain_cone2.precedes(("3/2", "3/2"), (2, 1))
    assert not chain_cone2.precedes((2, 1), ("3/2", "3/2"))


def test_faces_of_planar_cone(chain_cone2):
    faces = chain_cone2.faces
    assert [f.dim for f in faces] == [0, 1, 1, 2]
    assert all(f.dim + f.conjugate_dim == 2 for f in faces)
    assert faces[0].generators == ()
    assert faces[-1].conjugate == ()


def test_faces_of_orthant(orthant3):
    dims = sorted(f.dim for f in orthant3.faces)
    assert dims == [0, 1, 1, 1, 2, 2, 2, 3]


def test_face_of_point(chain_cone2):
    assert chain_cone2.face_of((0, 0)).dim == 0
    assert chain_cone2.face_of((1, 1)).generators == (1,)
    assert chain_cone2.face_of((3, 0)).generators == (0,)
    assert chain_cone2.face_of((2, 1)).dim == 2
    with pytest.raises(ConeError):
        chain_cone2.face_of((-1, 0))


def test_chain_cone_in_three_dimensions():
    C = chain_cone(3)
    assert C.generators == ((1, 0, 0), (1, 1, 0), (1, 1, 1))
    assert C.is_compatible
    assert len(C.faces) == 8


@pytest.mark.parametrize(
    "generators",
    [
        [],
        [(0, 0)],
        [(1, 0), (1, 0, 0)],
        [(1, 1), (2, 2)],
    ],
)
def test_invalid_cones(generators):
    with pytest.raises(ConeError):
        PolyhedralCone.from_generators(generators)


def test_cone_json(chain_cone2):
    data = cone_to_json(chain_cone2)
    assert data == {"dim": 2, "generators": [[1, 0], [1, 1]]}
    assert cone_from_json(data) == chain_cone2
    with pytest.raises(ConeError):
        cone_from_json({"dim": 3, "generators": [[1, 0], [1, 1]]})


def test_orthant_cone_is_self_dual():
    C = orthant_cone(2)
    assert C.generators == C.facet_normals == ((0, 1), (1, 0))
