"""
Поляры C-тел и оценки произведения Малера.

Иррациональные правые части берутся как верхние концы интервалов
из abx.cbodies.enclosure.
"""

from fractions import Fraction
from math import factorial
from typing import Sequence

from abx.antiblocking import (
    AntiBlockingBody,
    DecompositionMode,
    abdual,
    antiblocking_to_json,
    assembled_difference,
)
from abx.cbodies.cayley import cayley, cayley_hull, cayley_to_json
from abx.cbodies.enclosure import (
    cbody_asymptotic_bound,
    cbody_mahler_bound,
    join_product_binomial_bound,
    join_product_central_bound,
)
from abx.exactgeom import negate, polar, polytope_to_json, scale, volume
from abx.records import CheckReport, Relation, make_record, theorem

__all__ = ("cbody_polar", "nearly_mahler_check", "join_volume_product")

DEFAULT_LAMBDAS = (0, "1/4", "1/2", "3/4", 1)


def join_volume_product(K: AntiBlockingBody) -> Fraction:
    """Vol(K ∨ −K)·Vol(AK ∨ −AK)"""
    AK = abdual(K)
    return volume(assembled_difference(K, K, DecompositionMode.HULL)) * volume(
        assembled_difference(AK, AK, DecompositionMode.HULL)
    )


def cbody_polar(
    K: AntiBlockingBody,
    T: AntiBlockingBody,
    lambdas: Sequence = DEFAULT_LAMBDAS,
    instance_id: str = "",
) -> CheckReport:
    """C(K,−T)° = C(−2AT, 2AK) и произведения Малера семейства C_λ(K)"""
    n = K.dim
    AK, AT = abdual(K), abdual(T)
    C = cayley(K, T)
    global_polar = polar(C.body)
    expected = cayley_hull(negate(scale(AT.body, 2)), scale(AK.body, 2))
    same = global_polar == expected
    report = CheckReport(instance_id=instance_id)
    report.records.append(
        make_record(
            instance_id,
            theorem.CAYLEY_POLAR,
            volume(global_polar),
            volume(expected),
            relation=Relation.SAME,
            holds=same,
            equality=same,
            witness=lambda: {
                "instance_id": instance_id,
                "C": cayley_to_json(C),
                "expected_polar": polytope_to_json(expected),
            },
        )
    )

    witness = lambda: {"instance_id": instance_id, "K": antiblocking_to_json(K)}  # noqa E731
    C1 = cayley(K, K)
    product = C1.volume * volume(polar(C1.body))
    report.records.append(
        make_record(
            instance_id,
            theorem.CAYLEY_PRODUCT_IDENTITY,
            product,
            Fraction(2 ** (n + 2), (n + 1) ** 2) * join_volume_product(K),
            relation=Relation.EQ,
            witness=witness,
        )
    )
    smallest = product
    for lam in lambdas:
        C_lam = cayley(K, K, lam)
        lam_product = C_lam.volume * volume(polar(C_lam.body))
        smallest = min(smallest, lam_product)
        report.records.append(
            make_record(
                instance_id,
                theorem.CAYLEY_MAHLER_LAMBDA,
                lam_product,
                product,
                witness=witness,
            )
        )
        report.values[f"mahler_{C_lam.lam}"] = lam_product
    report.records.append(
        make_record(
            instance_id,
            theorem.CAYLEY_MAHLER_BOUND,
            product,
            cbody_mahler_bound(n).high,
            witness=witness,
        )
    )
    # Асимптотическая константа превышает значение на кубе при n ≤ 4
    report.records.append(
        make_record(
            instance_id,
            theorem.CAYLEY_MAHLER_ASYMPTOTIC,
            smallest,
            cbody_asymptotic_bound(n).high,
            asserted=False,
        )
    )
    report.values["mahler_product"] = product
    return report


def nearly_mahler_check(K: AntiBlockingBody, instance_id: str = "") -> CheckReport:
    """Нижние оценки Vol(K ∨ −K)·Vol(AK ∨ −AK)"""
    n = K.dim
    product = join_volume_product(K)
    witness = lambda: {"instance_id": instance_id, "K": antiblocking_to_json(K)}  # noqa E731
    report = CheckReport(instance_id=instance_id)
    report.records.append(
        make_record(
            instance_id,
            theorem.JOIN_PRODUCT_BINOMIAL,
            product,
            join_product_binomial_bound(n).high,
            witness=witness,
        )
    )
    report.records.append(
        make_record(
            instance_id,
            theorem.JOIN_PRODUCT_CENTRAL,
            product,
            join_product_central_bound(n).high,
            witness=witness,
        )
    )
    # Равносильно гипотезе Малера для C(K), не доказано
    report.records.append(
        make_record(
            instance_id,
            theorem.JOIN_PRODUCT_MAHLER,
            product,
            Fraction(2**n * (n + 1), factorial(n)),
            asserted=False,
        )
    )
    report.values["join_product"] = product
    return report
