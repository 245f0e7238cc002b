"""
Двойственность anti-blocking тел.

    AK = {y ∈ R^n_+ : ⟨y,x⟩ ≤ 1 для всех x ∈ K} = K° ∩ R^n_+

Для локально anti-blocking тела поляра собирается по ортантам:
K° = ∪_σ σ A(K_σ).
"""

from fractions import Fraction
from math import factorial

from abx.antiblocking.body import (
    AntiBlockingBody,
    LocallyAntiBlockingBody,
    sign_vectors,
)
from abx.antiblocking.hanner import is_reduced_hanner
from abx.exactgeom import (
    canonical_hull,
    from_inequalities,
    polar,
    polytope_to_json,
    reflect,
    unit_vector,
    volume,
)
from abx.exception import GeometryError, OriginNotInteriorError
from abx.records import CheckReport, Relation, make_record, theorem

__all__ = ("abdual", "locally_ab_polar", "origin_is_interior")


def abdual(K: AntiBlockingBody) -> AntiBlockingBody:
    """A(K) по образующим K: {y ≥ 0, ⟨g,y⟩ ≤ 1}

    Пример:

        abdual(down_closure([(2, 3)]))
        >>> треугольник conv{0, e_1/2, e_2/3}
    """
    if not K.is_full_dimensional:
        raise GeometryError("A(K) неограничено: тело K не полномерно.")
    n = K.dim
    inequalities = [(tuple(-x for x in unit_vector(n, i)), Fraction(0)) for i in range(n)]
    inequalities += [(g, Fraction(1)) for g in K.generators]
    return AntiBlockingBody.trusted(from_inequalities(n, inequalities))


def origin_is_interior(K: LocallyAntiBlockingBody) -> bool:
    body = K.assembled
    return body.is_full_dimensional and all(f.offset > 0 for f in body.facets)


def locally_ab_polar(
    K: LocallyAntiBlockingBody, instance_id: str = ""
) -> tuple[LocallyAntiBlockingBody, CheckReport]:
    """Поляра по кускам и отчёт о произведении Малера

    Сравнивает собранную по кускам поляру с глобальной polar(K)
    и проверяет Vol(K)·Vol(K°) ≥ 4^n/n!.
    """
    if not origin_is_interior(K):
        raise OriginNotInteriorError()
    n = K.dim
    pieces = {sigma: abdual(K.pieces[sigma]) for sigma in sign_vectors(n)}
    assembled = canonical_hull(
        v for sigma, piece in pieces.items() for v in reflect(piece.body, sigma).vertices
    )
    result = LocallyAntiBlockingBody(n, assembled, pieces)
    global_polar = polar(K.assembled)

    report = CheckReport(instance_id=instance_id)
    same = assembled == global_polar
    report.records.append(
        make_record(
            instance_id,
            theorem.LOCAL_POLAR,
            volume(assembled),
            volume(global_polar),
            relation=Relation.SAME,
            holds=same,
            equality=same,
            witness=lambda: {
                "instance_id": instance_id,
                "body": polytope_to_json(K.assembled),
                "piecewise_polar": polytope_to_json(assembled),
            },
        )
    )
    product = K.volume * volume(global_polar)
    bound = Fraction(4**n, factorial(n))
    mahler = make_record(
        instance_id,
        theorem.LOCAL_MAHLER,
        product,
        bound,
        witness=lambda: {"instance_id": instance_id, "body": polytope_to_json(K.assembled)},
    )
    report.records.append(mahler)

    hanner = all(is_reduced_hanner(p) for p in K.pieces.values())
    hanner_scaled = all(is_reduced_hanner(p, scaled=True) for p in K.pieces.values())
    equal_volumes = len({p.volume for p in K.pieces.values()}) == 1
    expected = hanner_scaled and equal_volumes
    report.flags.update(
        pieces_reduced_hanner=hanner,
        pieces_reduced_hanner_scaled=hanner_scaled,
        pieces_equal_volume=equal_volumes,
        equality_expected=expected,
        equality_matches=expected == mahler.equality,
    )
    report.values.update(volume=K.volume, polar_volume=volume(global_polar))
    return result, report
