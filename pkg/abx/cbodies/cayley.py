"""
C-тела (конструкция Кэли).

    C_λ(K,−T) = conv(K × {λ} ∪ −T × {−λ} ∪ [−e_{n+1}, e_{n+1}])

При λ = 1 отрезок лишний и отбрасывается канонизацией, получается
C(K,−T) = (K × {1}) ∨ (−T × {−1}). Сечение C(K,−T) на высоте h равно
(1+h)/2·K − (1−h)/2·T.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from abx.antiblocking import (
    AntiBlockingBody,
    antiblocking_to_json,
    complement,
    coordinate_subspaces,
    mixed_volume_ab,
)
from abx.exactgeom import (
    Polytope,
    canonical_hull,
    from_inequalities,
    mask_point,
    minkowski_sum,
    negate,
    polytope_to_json,
    scale,
    to_rational,
    volume,
)
from abx.exception import DimensionMismatchError, GeometryError
from abx.records import CheckReport, Relation, make_record, theorem

__all__ = (
    "CayleyBody",
    "cayley_hull",
    "cayley",
    "cayley_slice",
    "cayley_to_json",
    "cbody_volume_identity",
    "cayley_dissection_check",
    "slice_check",
    "shadow_invariance",
)


@dataclass(frozen=True, eq=False)
class CayleyBody:
    base_dim: int
    lam: Fraction
    body: Polytope
    parents: tuple[AntiBlockingBody, AntiBlockingBody]

    @property
    def volume(self) -> Fraction:
        return self.body.volume


def cayley_hull(
    top: Polytope, bottom: Polytope, lam=1, segment: bool = False
) -> Polytope:
    """conv(top × {λ} ∪ bottom × {−λ}), при segment=True с отрезком [−e_{n+1}, e_{n+1}]"""
    if top.dim != bottom.dim:
        raise DimensionMismatchError()
    lam = Fraction(lam)
    points = [v + (lam,) for v in top.vertices]
    points += [v + (-lam,) for v in bottom.vertices]
    if segment:
        zero = tuple(Fraction(0) for _ in range(top.dim))
        points += [zero + (Fraction(1),), zero + (Fraction(-1),)]
    return canonical_hull(points)


def cayley(K: AntiBlockingBody, T: AntiBlockingBody, lam=1) -> CayleyBody:
    """C_λ(K,−T) ⊆ R^{n+1}

    Пример:

        cayley(unit_cube(1), unit_cube(1))
        >>> параллелограмм (−1,−1), (0,−1), (0,1), (1,1) площади 2
    """
    if K.dim != T.dim:
        raise DimensionMismatchError()
    lam = to_rational(lam)
    if not 0 <= lam <= 1:
        raise GeometryError(f"λ = {lam} вне отрезка [0, 1].")
    body = cayley_hull(K.body, negate(T.body), lam, segment=lam < 1)
    return CayleyBody(K.dim, lam, body, (K, T))


def cayley_slice(C: CayleyBody, h) -> Polytope:
    """Сечение C-тела гиперплоскостью x_{n+1} = h в координатах R^n"""
    h = to_rational(h)
    if not -1 <= h <= 1:
        raise GeometryError(f"Высота {h} вне отрезка [−1, 1].")
    n = C.base_dim
    return from_inequalities(
        n,
        [(f.normal[:n], f.offset - f.normal[n] * h) for f in C.body.facets],
        [(e.normal[:n], e.offset - e.normal[n] * h) for e in C.body.equations],
    )


def cayley_to_json(C: CayleyBody, parent_ids: Sequence[str] = ("K", "T")) -> dict:
    data = polytope_to_json(C.body)
    data["lambda"] = str(C.lam)
    data["parents"] = list(parent_ids)
    return data


def slice_check(
    K: AntiBlockingBody, T: AntiBlockingBody, heights: Sequence = (0,), instance_id: str = ""
) -> CheckReport:
    """Сечение C(K,−T) на высоте h равно (1+h)/2·K − (1−h)/2·T"""
    C = cayley(K, T)
    report = CheckReport(instance_id=instance_id)
    for h in heights:
        h = to_rational(h)
        section = cayley_slice(C, h)
        combination = minkowski_sum(
            scale(K.body, (1 + h) / 2), scale(negate(T.body), (1 - h) / 2)
        )
        same = section == combination
        report.records.append(
            make_record(
                instance_id,
                theorem.CAYLEY_SLICE,
                volume(section),
                volume(combination),
                relation=Relation.SAME,
                holds=same,
                equality=same,
                witness=lambda: {"instance_id": instance_id, "C": cayley_to_json(C)},
            )
        )
    return report


def cbody_volume_identity(
    K: AntiBlockingBody, T: AntiBlockingBody, instance_id: str = ""
) -> CheckReport:
    """Vol_{n+1}(C(K,−T)) = (2/(n+1))·Σ_j V(K[j], −T[n−j])"""
    C = cayley(K, T)
    n = K.dim
    formula = Fraction(2, n + 1) * sum(
        (mixed_volume_ab(K, T, j) for j in range(n + 1)), Fraction(0)
    )
    record = make_record(
        instance_id,
        theorem.CAYLEY_VOLUME,
        C.volume,
        formula,
        relation=Relation.EQ,
        witness=lambda: {"instance_id": instance_id, "C": cayley_to_json(C)},
    )
    return CheckReport(instance_id=instance_id, records=[record])


def shadow_invariance(
    K: AntiBlockingBody,
    T: AntiBlockingBody,
    lambdas: Sequence = (0, "1/4", "1/2", "3/4", 1),
    instance_id: str = "",
) -> CheckReport:
    """Vol(C_λ(K,−T)) не зависит от λ"""
    reference = cayley(K, T).volume
    report = CheckReport(instance_id=instance_id)
    for lam in lambdas:
        C = cayley(K, T, lam)
        report.records.append(
            make_record(
                instance_id,
                theorem.SHADOW_INVARIANCE,
                C.volume,
                reference,
                relation=Relation.EQ,
                witness=lambda C=C: {"instance_id": instance_id, "C": cayley_to_json(C)},
            )
        )
        report.values[f"volume_{C.lam}"] = C.volume
    return report


def _coordinate_section(K: AntiBlockingBody, E: tuple[int, ...]) -> Polytope:
    """K ∩ E в R^n; для anti-blocking тела совпадает с P_E K"""
    return canonical_hull([mask_point(v, E) for v in K.vertices])


def cayley_dissection_check(
    K: AntiBlockingBody, T: AntiBlockingBody, instance_id: str = ""
) -> CheckReport:
    """C-тела кусков K − T разрезают C(K,−T)

    Σ_E Vol(C(K ∩ E, −(T ∩ E⊥))) = Vol(C(K,−T)): сечение каждого куска
    на высоте h есть кусок разрезания (1+h)/2·K − (1−h)/2·T.
    """
    if K.dim != T.dim:
        raise DimensionMismatchError()
    n = K.dim
    C = cayley(K, T)
    total = Fraction(0)
    for E in coordinate_subspaces(n):
        piece = cayley_hull(
            _coordinate_section(K, E), negate(_coordinate_section(T, complement(E, n)))
        )
        total += volume(piece)
    record = make_record(
        instance_id,
        theorem.CAYLEY_DISSECTION,
        C.volume,
        total,
        relation=Relation.EQ,
        witness=lambda: {
            "instance_id": instance_id,
            "K": antiblocking_to_json(K),
            "T": antiblocking_to_json(T),
        },
    )
    report = CheckReport(instance_id=instance_id, records=[record])
    report.values["pieces"] = 2**n
    return report
