"""
Полиэдральные конусы, двойственные конусы и решётка граней.

    C∨ = {y : ⟨y,x⟩ ≥ 0 для всех x ∈ C}
    F⋄ = {c ∈ C∨ : ⟨c,x⟩ = 0 для всех x ∈ F}

Образующие C∨ совпадают с внутренними нормалями граней C, поэтому
сопряжённая грань задаётся набором нормалей, обращающихся в ноль на F.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from abx.exactgeom import (
    dot,
    extreme_rays,
    independent_rows,
    make_point,
    matrix_rank,
    primitive_vector,
)
from abx.exception import ConeError, GeometryError

__all__ = (
    "PolyhedralCone",
    "ConeFace",
    "cone_faces",
    "orthant_cone",
    "cone_to_json",
    "cone_from_json",
)

IntVector = tuple[int, ...]


@dataclass(frozen=True)
class ConeFace:
    """Грань F конуса C вместе с сопряжённой гранью F⋄ конуса C∨"""

    # индексы образующих C, лежащих в F
    generators: tuple[int, ...]
    # индексы нормалей C (образующих C∨), лежащих в F⋄
    conjugate: tuple[int, ...]
    dim: int
    conjugate_dim: int
    # базис span F из образующих
    basis: tuple[IntVector, ...]
    conjugate_basis: tuple[IntVector, ...]


@dataclass(frozen=True, eq=False)
class PolyhedralCone:
    dim: int
    generators: tuple[IntVector, ...]
    facet_normals: tuple[IntVector, ...]

    @classmethod
    def from_generators(cls, generators: Iterable[Sequence]) -> "PolyhedralCone":
        """Конус по порождающим векторам (лишние отбрасываются)

        Пример:

            PolyhedralCone.from_generators([(1, 0), (1, 1)]).facet_normals
            >>> ((0, 1), (1, -1))
        """
        vectors = [primitive_vector(make_point(g)) for g in generators]
        vectors = [v for v in vectors if any(v)]
        if not vectors:
            raise ConeError("Нужен хотя бы один ненулевой образующий.")
        dim = len(vectors[0])
        if any(len(v) != dim for v in vectors):
            raise ConeError("Образующие разной длины.")
        if matrix_rank(vectors) < dim:
            raise ConeError("Конус не полномерен.")
        try:
            normals = extreme_rays(vectors)
            rays = extreme_rays(normals)
        except GeometryError as exc:
            raise ConeError(f"Конус не заострён: {exc.message}")
        return cls(dim, tuple(sorted(rays)), tuple(sorted(normals)))

    @classmethod
    def from_normals(cls, normals: Iterable[Sequence]) -> "PolyhedralCone":
        """Конус {x : ⟨a,x⟩ ≥ 0}"""
        return cls.from_generators(_dual_rays(normals))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyhedralCone):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def dual(self) -> "PolyhedralCone":
        return PolyhedralCone(self.dim, self.facet_normals, self.generators)

    def contains(self, point: Sequence) -> bool:
        point = make_point(point)
        return all(dot(a, point) >= 0 for a in self.facet_normals)

    def precedes(self, x: Sequence, y: Sequence) -> bool:
        """x ⪯ y, то есть y − x ∈ C∨"""
        diff = tuple(b - a for a, b in zip(make_point(x), make_point(y)))
        return all(dot(g, diff) >= 0 for g in self.generators)

    @cached_property
    def is_compatible(self) -> bool:
        """C ⊆ C∨"""
        return all(dot(g, h) >= 0 for g in self.generators for h in self.generators)

    @cached_property
    def faces(self) -> tuple[ConeFace, ...]:
        return tuple(cone_faces(self))

    def face_of(self, point: Sequence) -> ConeFace:
        """Грань, в относительной внутренности которой лежит точка конуса"""
        point = make_point(point)
        tight = tuple(
            i for i, a in enumerate(self.facet_normals) if dot(a, point) == 0
        )
        for face in self.faces:
            if face.conjugate == tight:
                return face
        raise ConeError(f"Точка {point} не лежит в конусе.")


def _dual_rays(vectors: Iterable[Sequence]) -> list[IntVector]:
    vectors = [primitive_vector(make_point(v)) for v in vectors]
    try:
        return extreme_rays(vectors)
    except GeometryError as exc:
        raise ConeError(exc.message)


def _basis(vectors: Sequence[IntVector]) -> tuple[IntVector, ...]:
    return tuple(vectors[i] for i in independent_rows(vectors)) if vectors else ()


def cone_faces(C: PolyhedralCone) -> list[ConeFace]:
    """Все грани перебором подмножеств нормалей с замыканием

    Каждый набор нормалей S высекает грань F_S = {g : ⟨a,g⟩ = 0, a ∈ S};
    её сопряжённая грань порождена всеми нормалями, обращающимися в ноль на F_S.
    """
    gens, normals = C.generators, C.facet_normals
    found: dict[tuple[int, ...], ConeFace] = {}
    for size in range(len(normals) + 1):
        for subset in combinations(range(len(normals)), size):
            members = tuple(
                i for i, g in enumerate(gens) if all(dot(normals[k], g) == 0 for k in subset)
            )
            if members in found:
                continue
            conjugate = tuple(
                k
                for k, a in enumerate(normals)
                if all(dot(a, gens[i]) == 0 for i in members)
            )
            basis = _basis([gens[i] for i in members])
            conjugate_basis = _basis([normals[k] for k in conjugate])
            found[members] = ConeFace(
                members, conjugate, len(basis), len(conjugate_basis), basis, conjugate_basis
            )
    return sorted(found.values(), key=lambda f: (f.dim, f.generators))


def orthant_cone(n: int) -> PolyhedralCone:
    """R^n_+ (самодвойственный)"""
    units = tuple(tuple(int(i == k) for k in range(n)) for i in range(n))
    return PolyhedralCone(n, tuple(sorted(units)), tuple(sorted(units)))


def cone_to_json(C: PolyhedralCone) -> dict:
    return {"dim": C.dim, "generators": [list(g) for g in C.generators]}


def cone_from_json(data: dict) -> PolyhedralCone:
    C = PolyhedralCone.from_generators(data["generators"])
    if C.dim != data.get("dim", C.dim):
        raise ConeError("Длина образующих не совпадает с dim.")
    return C