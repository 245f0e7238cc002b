"""
Разбиение K − L и K ∨ (−L) по граням конуса.

Для C-anti-blocking K и C∨-anti-blocking L

    K + (−L) = ∪_F K_F + (−L_{F⋄}),   K ∨ (−L) = ∪_F K_F ∨ (−L_{F⋄}),

где K_F = K ∩ span F и L_{F⋄} = L ∩ span F⋄. Линейные оболочки F и F⋄
ортогональны, поэтому объём куска считается прямо в R^n и остаётся
рациональным.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from abx.antiblocking.decompose import DecompositionMode
from abx.coneab.body import CABBody, a_c_dual, cab_to_json, hat_difference
from abx.coneab.cone import ConeFace
from abx.exactgeom import (
    MAX_ORACLE_DIM,
    Polytope,
    convex_union,
    from_inequalities,
    minkowski_sum,
    mixed_volume_oracle,
    negate,
    polytope_to_json,
    volume,
)
from abx.exception import ConeError
from abx.records import CheckReport, Relation, make_record, theorem

__all__ = (
    "ConePiece",
    "face_section",
    "cone_dissect",
    "cone_mixed_volumes",
    "cone_dissection_check",
)


@dataclass(frozen=True)
class ConePiece:
    face: ConeFace
    # K_F
    primal: Polytope
    # L_{F⋄}
    conjugate: Polytope
    piece: Polytope

    @property
    def volume(self) -> Fraction:
        return self.piece.volume


def face_section(body: Polytope, orthogonal: tuple) -> Polytope:
    """body ∩ {x : ⟨a,x⟩ = 0 для a из orthogonal}"""
    equations = [(a, Fraction(0)) for a in orthogonal]
    return from_inequalities(body.dim, body.facets, list(body.equations) + equations)


def _check_pair(K: CABBody, L: CABBody) -> None:
    if not K.cone.is_compatible:
        raise ConeError("Разбиение требует C ⊆ C∨.")
    if L.cone != K.cone.dual():
        raise ConeError("Тело L должно быть C∨-anti-blocking.")
    if not (K.proper and L.proper):
        raise ConeError("Тела K и L должны быть собственными.")


def cone_dissect(
    K: CABBody, L: CABBody, mode: DecompositionMode = DecompositionMode.SUM
) -> list[ConePiece]:
    """Куски K_F + (−L_{F⋄}) (или ∨) по всем граням F конуса K.cone

    Пример:

        cone_dissect(CABBody(orthant_cone(2), Δ₂), CABBody(orthant_cone(2), Δ₂))
        >>> объёмы кусков 1/2, 1, 1, 1/2
    """
    _check_pair(K, L)
    combine = minkowski_sum if DecompositionMode(mode) is DecompositionMode.SUM else convex_union
    pieces = []
    for face in K.cone.faces:
        primal = face_section(K.body, face.conjugate_basis)
        conjugate = face_section(L.body, face.basis)
        pieces.append(ConePiece(face, primal, conjugate, combine(primal, negate(conjugate))))
    return pieces


def cone_mixed_volumes(pieces: list[ConePiece], n: int) -> list[Fraction]:
    """V(K[j], −L[n−j]) = binom(n,j)⁻¹ Σ_{dim F = j} Vol(K_F − L_{F⋄})"""
    totals = [Fraction(0)] * (n + 1)
    for piece in pieces:
        totals[piece.face.dim] += piece.volume
    return [total / comb(n, j) for j, total in enumerate(totals)]


def cone_dissection_check(K: CABBody, L: CABBody, instance_id: str = "") -> CheckReport:
    """Объёмы разбиений, смешанные объёмы, K − L = K̂ ∩ (−L̂) и A_C A_C K = K"""
    _check_pair(K, L)
    n = K.dim

    def witness() -> dict:
        return {"instance_id": instance_id, "K": cab_to_json(K), "L": cab_to_json(L, "C∨")}

    report = CheckReport(instance_id=instance_id)
    minus_L = negate(L.body)
    difference = minkowski_sum(K.body, minus_L)
    for mode, whole in (
        (DecompositionMode.SUM, difference),
        (DecompositionMode.HULL, convex_union(K.body, minus_L)),
    ):
        pieces = cone_dissect(K, L, mode)
        report.records.append(
            make_record(
                instance_id,
                theorem.CONE_DISSECTION,
                volume(whole),
                sum((p.volume for p in pieces), Fraction(0)),
                relation=Relation.EQ,
                witness=witness,
            )
        )
        if mode is DecompositionMode.SUM:
            mixed = cone_mixed_volumes(pieces, n)
            report.values["pieces"] = len(pieces)

    if n <= MAX_ORACLE_DIM:
        for j, value in enumerate(mixed):
            report.records.append(
                make_record(
                    instance_id,
                    theorem.CONE_MIXED_VOLUME,
                    value,
                    mixed_volume_oracle([K.body] * j + [minus_L] * (n - j)),
                    relation=Relation.EQ,
                    witness=witness,
                )
            )
    report.values.update({f"V_{j}": value for j, value in enumerate(mixed)})

    hat = hat_difference(K, L)
    same = hat == difference
    report.records.append(
        make_record(
            instance_id,
            theorem.CONE_DIFFERENCE_HAT,
            volume(difference),
            volume(hat),
            relation=Relation.SAME,
            holds=same,
            equality=same,
            witness=lambda: {**witness(), "hat": polytope_to_json(hat)},
        )
    )

    for body in (K, L):
        back = a_c_dual(a_c_dual(body))
        same = back == body
        report.records.append(
            make_record(
                instance_id,
                theorem.CONE_DUALITY,
                volume(back.body),
                body.body.volume,
                relation=Relation.SAME,
                holds=same,
                equality=same,
                witness=witness,
            )
        )
    return report
