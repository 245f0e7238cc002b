"""
Проверки неравенств для anti-blocking тел на отдельных экземплярах.

Каждая функция возвращает CheckReport: записи с точными lhs/rhs/slack
и флаги случаев равенства.
"""

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

from abx.antiblocking.body import AntiBlockingBody, antiblocking_to_json, orthant_piece
from abx.antiblocking.decompose import (
    DecompositionMode,
    assembled_difference,
    complement,
    decompose_difference,
    lift_product,
    mixed_volume_ab,
)
from abx.antiblocking.duality import abdual
from abx.antiblocking.hanner import is_box, is_reduced_hanner, is_simplex
from abx.exactgeom import (
    MAX_ORACLE_DIM,
    Polytope,
    contains_polytope,
    convex_union,
    embed,
    intersection,
    minkowski_sum,
    mixed_volume_oracle,
    negate,
    polytope_to_json,
    project_section,
    volume,
)
from abx.exception import DimensionMismatchError, GeometryError, NotAntiBlockingError
from abx.records import CheckReport, Relation, make_record, theorem

__all__ = (
    "godbersen_check",
    "saint_raymond_products",
    "saint_raymond_multi",
    "reverse_kleitman_check",
    "decomposition_check",
    "closure_check",
    "sandwich_check",
    "rogers_shephard_check",
)


def _full(*bodies: AntiBlockingBody) -> int:
    n = bodies[0].dim
    for body in bodies:
        if body.dim != n:
            raise DimensionMismatchError()
        if not body.is_full_dimensional:
            raise GeometryError("Тело должно быть полномерным.")
    return n


def _witness(instance_id: str, **bodies: AntiBlockingBody):
    return lambda: {
        "instance_id": instance_id,
        **{name: antiblocking_to_json(body) for name, body in bodies.items()},
    }


def godbersen_check(K: AntiBlockingBody, instance_id: str = "") -> CheckReport:
    """Vol(K) ≤ V(K[j], −K[n−j]) ≤ binom(n,j)·Vol(K) для всех j

    Равенство справа при 0 < j < n только для симплексов,
    слева только для брусов.
    """
    n = _full(K)
    vol = K.volume
    witness = _witness(instance_id, K=K)
    report = CheckReport(instance_id=instance_id)
    upper_equality = lower_equality = False
    for j in range(n + 1):
        mixed = mixed_volume_ab(K, K, j)
        upper = make_record(
            instance_id, theorem.GODBERSEN_UPPER, comb(n, j) * vol, mixed, witness=witness
        )
        lower = make_record(instance_id, theorem.GODBERSEN_LOWER, mixed, vol, witness=witness)
        report.records += [upper, lower]
        report.values[f"V_{j}"] = mixed
        if 0 < j < n:
            upper_equality |= upper.equality
            lower_equality |= lower.equality

    simplex, box = is_simplex(K), is_box(K)
    report.flags.update(
        is_simplex=simplex,
        is_box=box,
        upper_equality=upper_equality,
        lower_equality=lower_equality,
        upper_equality_matches=n < 2 or upper_equality == simplex,
        lower_equality_matches=n < 2 or lower_equality == box,
    )
    report.values["volume"] = vol
    return report


def saint_raymond_products(
    K: AntiBlockingBody,
    T: AntiBlockingBody,
    j: int | None = None,
    instance_id: str = "",
) -> CheckReport:
    """Vol(K)·Vol(AK) ≥ 1/n! и V(K[j],−T[n−j])·V(AK[j],−AT[n−j]) ≥ 1/(j!(n−j)!)

    Без j смешанное неравенство проверяется для всех 0 ≤ j ≤ n.
    """
    n = _full(K, T)
    if j is not None and not 0 <= j <= n:
        raise GeometryError(f"j = {j} вне диапазона [0, {n}].")
    AK, AT = abdual(K), abdual(T)
    witness = _witness(instance_id, K=K, T=T)
    report = CheckReport(instance_id=instance_id)

    plain = make_record(
        instance_id,
        theorem.SAINT_RAYMOND,
        K.volume * AK.volume,
        Fraction(1, factorial(n)),
        witness=witness,
    )
    report.records.append(plain)

    mixed_equality = []
    for k in range(n + 1) if j is None else (j,):
        record = make_record(
            instance_id,
            theorem.MIXED_SAINT_RAYMOND,
            mixed_volume_ab(K, T, k) * mixed_volume_ab(AK, AT, k),
            Fraction(1, factorial(k) * factorial(n - k)),
            witness=witness,
        )
        report.records.append(record)
        if record.equality:
            mixed_equality.append(k)

    hanner_scaled = is_reduced_hanner(K, scaled=True)
    report.flags.update(
        reduced_hanner=is_reduced_hanner(K),
        reduced_hanner_scaled=hanner_scaled,
        sr_equality=plain.equality,
        sr_equality_matches=plain.equality == hanner_scaled,
        mixed_sr_equality=bool(mixed_equality),
    )
    return report


def saint_raymond_multi(
    Ks: Sequence[AntiBlockingBody],
    Ts: Sequence[AntiBlockingBody],
    instance_id: str = "",
) -> CheckReport:
    """V(K_1..K_j, −T_1..−T_{n−j})·V(AK_1..AK_j, −AT_1..−AT_{n−j}) ≥ 1/(j!(n−j)!)"""
    bodies = list(Ks) + list(Ts)
    if not bodies:
        raise GeometryError("Пустой список тел.")
    n = _full(*bodies)
    if len(bodies) != n:
        raise DimensionMismatchError("Нужно ровно n тел в R^n.")
    j = len(Ks)
    primal = [K.body for K in Ks] + [negate(T.body) for T in Ts]
    dual = [abdual(K).body for K in Ks] + [negate(abdual(T).body) for T in Ts]
    record = make_record(
        instance_id,
        theorem.MIXED_SAINT_RAYMOND_MULTI,
        mixed_volume_oracle(primal) * mixed_volume_oracle(dual),
        Fraction(1, factorial(j) * factorial(n - j)),
        witness=lambda: {
            "instance_id": instance_id,
            "Ks": [antiblocking_to_json(K) for K in Ks],
            "Ts": [antiblocking_to_json(T) for T in Ts],
        },
    )
    return CheckReport(instance_id=instance_id, records=[record])


def reverse_kleitman_check(
    K: AntiBlockingBody,
    T: AntiBlockingBody,
    with_delta: bool = False,
    instance_id: str = "",
) -> CheckReport:
    """V(K[j],−T[n−j]) ≥ V(K[j],T[n−j]) и Vol(K−T) ≥ Vol(K+T)

    С with_delta дополнительно проверяется, что Δ(L) = (L−L) ∩ R^n_+
    для L = K − T совпадает с K + T и Vol(Δ(L)) ≤ Vol(L).
    """
    if K.dim != T.dim:
        raise DimensionMismatchError()
    n = K.dim
    witness = _witness(instance_id, K=K, T=T)
    report = CheckReport(instance_id=instance_id)
    if n <= MAX_ORACLE_DIM:
        for j in range(n + 1):
            plus = mixed_volume_oracle([K.body] * j + [T.body] * (n - j))
            report.records.append(
                make_record(
                    instance_id,
                    theorem.REVERSE_KLEITMAN_MIXED,
                    mixed_volume_ab(K, T, j),
                    plus,
                    witness=witness,
                )
            )
    difference = assembled_difference(K, T, DecompositionMode.SUM)
    total = minkowski_sum(K.body, T.body)
    report.records.append(
        make_record(
            instance_id,
            theorem.REVERSE_KLEITMAN,
            volume(difference),
            volume(total),
            witness=witness,
        )
    )
    if with_delta:
        delta = orthant_piece(minkowski_sum(difference, negate(difference)), (1,) * n)
        same = delta == total
        report.records.append(
            make_record(
                instance_id,
                theorem.ORDER_CONVEX_DIFFERENCE,
                volume(delta),
                volume(total),
                relation=Relation.SAME,
                holds=same,
                equality=same,
                witness=witness,
            )
        )
        report.records.append(
            make_record(
                instance_id,
                theorem.ORDER_CONVEX_KLEITMAN,
                volume(difference),
                volume(delta),
                witness=witness,
            )
        )
    return report


def decomposition_check(
    K: AntiBlockingBody, T: AntiBlockingBody, instance_id: str = ""
) -> CheckReport:
    """Точность разрезаний K − T, K ∨ (−T) и формулы смешанного объёма"""
    if K.dim != T.dim:
        raise DimensionMismatchError()
    n = K.dim
    witness = _witness(instance_id, K=K, T=T)
    report = CheckReport(instance_id=instance_id)

    difference = decompose_difference(K, T, DecompositionMode.SUM)
    report.records.append(
        make_record(
            instance_id,
            theorem.DIFFERENCE_DISSECTION,
            difference.volume,
            difference.piece_volume_sum(),
            relation=Relation.EQ,
            witness=witness,
        )
    )
    mixed = [mixed_volume_ab(K, T, j) for j in range(n + 1)]
    hull = assembled_difference(K, T, DecompositionMode.HULL)
    report.records.append(
        make_record(
            instance_id,
            theorem.HULL_DISSECTION,
            volume(hull),
            sum(mixed, Fraction(0)),
            relation=Relation.EQ,
            witness=witness,
        )
    )
    if n <= MAX_ORACLE_DIM:
        minus_T = negate(T.body)
        for j in range(n + 1):
            report.records.append(
                make_record(
                    instance_id,
                    theorem.MIXED_VOLUME_FORMULA,
                    mixed[j],
                    mixed_volume_oracle([K.body] * j + [minus_T] * (n - j)),
                    relation=Relation.EQ,
                    witness=witness,
                )
            )
    return report


def closure_check(K: AntiBlockingBody, T: AntiBlockingBody) -> dict[str, bool]:
    """Замкнутость класса относительно ∩, ∨ и + на паре тел"""
    results = {}
    for name, body in (
        ("intersection", intersection(K.body, T.body)),
        ("convex_union", convex_union(K.body, T.body)),
        ("minkowski_sum", minkowski_sum(K.body, T.body)),
    ):
        try:
            AntiBlockingBody.from_polytope(body)
        except NotAntiBlockingError:
            results[name] = False
        else:
            results[name] = True
    return results


def sandwich_check(
    K: AntiBlockingBody, E: Iterable[int], instance_id: str = ""
) -> CheckReport:
    """(K∩E) ∨ (K∩E⊥) ⊆ K ⊆ (K∩E) × (K∩E⊥)"""
    n = K.dim
    E = tuple(sorted(set(E)))
    if any(i < 0 or i >= n for i in E):
        raise GeometryError(f"Индексы {E} вне диапазона [0, {n}).")
    F = complement(E, n)
    A, B = K.projection(E), K.projection(F)
    inner = convex_union(embed(A, E, n), embed(B, F, n))
    outer = lift_product(A, E, B, n)
    witness = _witness(instance_id, K=K)
    report = CheckReport(instance_id=instance_id)
    report.records.append(
        make_record(
            instance_id,
            theorem.SANDWICH_INNER,
            K.volume,
            volume(inner),
            relation=Relation.CONTAINS,
            holds=contains_polytope(K.body, inner),
            equality=inner == K.body,
            witness=witness,
        )
    )
    report.records.append(
        make_record(
            instance_id,
            theorem.SANDWICH_OUTER,
            volume(outer),
            K.volume,
            relation=Relation.CONTAINS,
            holds=contains_polytope(outer, K.body),
            equality=outer == K.body,
            witness=witness,
        )
    )
    return report


def rogers_shephard_check(
    P: Polytope, J: Iterable[int], instance_id: str = ""
) -> CheckReport:
    """Vol_j(P∩E)·Vol_{n−j}(P_{E⊥}P) ≤ binom(n,j)Vol(P) и Vol(P−P) ≤ binom(2n,n)Vol(P)"""
    n = P.dim
    J = tuple(sorted(set(J)))
    _, section = project_section(P, J)
    projection, _ = project_section(P, complement(J, n))
    vol = volume(P)
    witness = lambda: {"instance_id": instance_id, "P": polytope_to_json(P)}  # noqa E731
    report = CheckReport(instance_id=instance_id)
    report.records.append(
        make_record(
            instance_id,
            theorem.ROGERS_SHEPHARD_SECTION,
            comb(n, len(J)) * vol,
            volume(section) * volume(projection),
            witness=witness,
        )
    )
    report.records.append(
        make_record(
            instance_id,
            theorem.ROGERS_SHEPHARD_DIFFERENCE,
            comb(2 * n, n) * vol,
            volume(minkowski_sum(P, negate(P))),
            witness=witness,
        )
    )
    return report
