"""
Симметризации Штейнера по координатным гиперплоскостям.

Тело K = {(x, s) : 0 ≤ s ≤ α(x)} вдоль оси a переходит в
S^t K = {(x, s) : −tα(x) ≤ s ≤ (1−t)α(x)}; t = 1/2 даёт симметрал Штейнера.
Оси нумеруются с нуля.
"""

from fractions import Fraction
from typing import Iterable

from abx.antiblocking import AntiBlockingBody, antiblocking_to_json, unconditional_closure
from abx.exactgeom import (
    MAX_ORACLE_DIM,
    Polytope,
    canonical_hull,
    contains_point,
    mixed_volume_oracle,
    polytope_to_json,
    scale,
    to_rational,
    volume,
)
from abx.exception import DimensionMismatchError, GeometryError
from abx.records import CheckReport, Relation, make_record, theorem

__all__ = (
    "steiner_symmetral",
    "steiner_volume_check",
    "iterated_symmetral",
    "steiner_monotonicity_check",
)

HALF = Fraction(1, 2)


def _body(K: AntiBlockingBody | Polytope) -> Polytope:
    return K.body if isinstance(K, AntiBlockingBody) else K


def _check_axis_closed(P: Polytope, axis: int) -> None:
    if not 0 <= axis < P.dim:
        raise GeometryError(f"Ось {axis} вне диапазона [0, {P.dim}).")
    for v in P.vertices:
        if v[axis] < 0:
            raise GeometryError(f"Вершина {v} лежит вне полупространства x_{axis} ≥ 0.")
        dropped = tuple(Fraction(0) if i == axis else x for i, x in enumerate(v))
        if not contains_point(P, dropped):
            raise GeometryError(
                f"Тело не замкнуто относительно обнуления координаты {axis}."
            )


def steiner_symmetral(K: AntiBlockingBody | Polytope, axis: int, t=HALF) -> Polytope:
    """S^t K вдоль оси axis

    Пример:

        steiner_symmetral(standard_simplex(2), 1)
        >>> conv{(0,−1/2), (0,1/2), (1,0)}
    """
    P = _body(K)
    t = to_rational(t)
    if not 0 <= t <= 1:
        raise GeometryError(f"t = {t} вне отрезка [0, 1].")
    _check_axis_closed(P, axis)

    def moved(v, factor):
        return tuple(factor * x if i == axis else x for i, x in enumerate(v))

    return canonical_hull(
        [moved(v, 1 - t) for v in P.vertices] + [moved(v, -t) for v in P.vertices]
    )


def steiner_volume_check(
    K: AntiBlockingBody,
    axis: int,
    ts: Iterable = (0, "1/4", "1/2", "3/4", 1),
    instance_id: str = "",
) -> CheckReport:
    """Vol(S^t K) = Vol(K) для всех t"""
    report = CheckReport(instance_id=instance_id)
    for t in ts:
        S = steiner_symmetral(K, axis, t)
        report.records.append(
            make_record(
                instance_id,
                theorem.STEINER_VOLUME,
                volume(S),
                K.volume,
                relation=Relation.EQ,
                witness=lambda S=S: {
                    "instance_id": instance_id,
                    "K": antiblocking_to_json(K),
                    "symmetral": polytope_to_json(S),
                },
            )
        )
    return report


def iterated_symmetral(
    K: AntiBlockingBody, instance_id: str = ""
) -> tuple[Polytope, CheckReport]:
    """S_{H_1} … S_{H_n} K и сравнение с K̂/2"""
    body = K.body
    for axis in range(K.dim):
        body = steiner_symmetral(body, axis)
    expected = scale(unconditional_closure(K).assembled, HALF)
    same = body == expected
    record = make_record(
        instance_id,
        theorem.ITERATED_SYMMETRAL,
        volume(body),
        volume(expected),
        relation=Relation.SAME,
        holds=same,
        equality=same,
        witness=lambda: {
            "instance_id": instance_id,
            "K": antiblocking_to_json(K),
            "symmetral": polytope_to_json(body),
        },
    )
    return body, CheckReport(instance_id=instance_id, records=[record])


def steiner_monotonicity_check(
    K: AntiBlockingBody,
    T: AntiBlockingBody,
    axis: int,
    j: int | None = None,
    instance_id: str = "",
) -> CheckReport:
    """V(S_H K[j], S_H T[n−j]) ≤ V(K[j], T[n−j]) через оракул"""
    if K.dim != T.dim:
        raise DimensionMismatchError()
    n = K.dim
    if n > MAX_ORACLE_DIM:
        raise GeometryError(f"Оракул ограничен размерностью {MAX_ORACLE_DIM}.")
    if j is not None and not 0 <= j <= n:
        raise GeometryError(f"j = {j} вне диапазона [0, {n}].")
    SK, ST = steiner_symmetral(K, axis), steiner_symmetral(T, axis)
    report = CheckReport(instance_id=instance_id)
    for k in range(n + 1) if j is None else (j,):
        report.records.append(
            make_record(
                instance_id,
                theorem.STEINER_MONOTONICITY,
                mixed_volume_oracle([K.body] * k + [T.body] * (n - k)),
                mixed_volume_oracle([SK] * k + [ST] * (n - k)),
                witness=lambda: {
                    "instance_id": instance_id,
                    "K": antiblocking_to_json(K),
                    "T": antiblocking_to_json(T),
                    "axis": axis,
                },
            )
        )
    return report
