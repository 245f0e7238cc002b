"""
Реестр проверочных наборов.

Каждый набор связывает вид корпуса с операциями проверки и перечисляет
теги утверждений, которые он порождает. Реестр служит машиночитаемой
картой: `abx suites` и `GET /suites` печатают именно его.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from abx.antiblocking import (
    DecompositionMode,
    assembled_difference,
    decomposition_check,
    godbersen_check,
    locally_ab_polar,
    reverse_kleitman_check,
    rogers_shephard_check,
    saint_raymond_multi,
    saint_raymond_products,
    sandwich_check,
)
from abx.cbodies import (
    cayley_dissection_check,
    cbody_polar,
    cbody_volume_identity,
    iterated_symmetral,
    nearly_mahler_check,
    shadow_invariance,
    slice_check,
    steiner_monotonicity_check,
    steiner_volume_check,
)
from abx.commands.config import CorpusKind
from abx.commands.corpus import Instance
from abx.coneab import (
    cone_dissection_check,
    dissection_of_space_check,
    nearest_point_check,
    polytope_projection_check,
)
from abx.exactgeom import MAX_ORACLE_DIM, Point
from abx.exception import ConfigurationError
from abx.posets import (
    MAX_ORACLE_SIZE,
    DoublePoset,
    chain_volume_check,
    ej_mixed_volume_check,
    ej_sequence_props,
    extensions_oracle_check,
    sidorenko_suite,
    stable_set_duality_check,
)
from abx.records import CheckReport, theorem

__all__ = ("Suite", "SUITES", "get_suite", "registry_json")

# Случайные точки для проекций на конус и разбиения пространства
NEAREST_POINTS = 1000
# Проекция на многогранник перебирает его грани, поэтому точек меньше
POLYTOPE_POINTS = 100
SHADOW_LAMBDAS = (0, "1/4", "1/2", "3/4", 1)

Runner = Callable[[Instance, int | None], list[CheckReport]]


@dataclass(frozen=True)
class Suite:
    name: str
    kind: CorpusKind
    # Экземпляр содержит пару объектов (K, T), (P, Q) или (π, σ)
    pairs: bool
    theorems: tuple[str, ...]
    run: Runner
    max_n: int
    description: str


def _j_values(n: int, j: int | None) -> range | tuple[int]:
    if j is None:
        return range(n + 1)
    if j > n:
        raise ConfigurationError(f"j = {j} больше n = {n}.")
    return (j,)


def _godbersen(instance: Instance, j: int | None) -> list[CheckReport]:
    (K,) = instance.payload
    return [godbersen_check(K, instance.instance_id)]


def _saint_raymond(instance: Instance, j: int | None) -> list[CheckReport]:
    (K,) = instance.payload
    return [saint_raymond_products(K, K, j, instance.instance_id)]


def _mixed_sr(instance: Instance, j: int | None) -> list[CheckReport]:
    K, T = instance.payload
    iid = instance.instance_id
    reports = [saint_raymond_products(K, T, j, iid), decomposition_check(K, T, iid)]
    n = K.dim
    if n <= MAX_ORACLE_DIM:
        k = n // 2 if j is None else j
        # n различных тел: K и T чередуются в обеих группах
        Ks = [(K, T)[i % 2] for i in range(k)]
        Ts = [(T, K)[i % 2] for i in range(n - k)]
        reports.append(saint_raymond_multi(Ks, Ts, iid))
    return reports


def _mahler_locally_ab(instance: Instance, j: int | None) -> list[CheckReport]:
    (K,) = instance.payload
    _, report = locally_ab_polar(K, instance.instance_id)
    return [report]


def _cbody_polar(instance: Instance, j: int | None) -> list[CheckReport]:
    K, T = instance.payload
    iid = instance.instance_id
    return [cbody_polar(K, T, SHADOW_LAMBDAS, iid), nearly_mahler_check(K, iid)]


def _cbody_volume(instance: Instance, j: int | None) -> list[CheckReport]:
    K, T = instance.payload
    iid = instance.instance_id
    return [
        cbody_volume_identity(K, T, iid),
        slice_check(K, T, ("-1/2", 0, "1/2"), iid),
        cayley_dissection_check(K, T, iid),
    ]


def _shadow(instance: Instance, j: int | None) -> list[CheckReport]:
    K, T = instance.payload
    return [shadow_invariance(K, T, SHADOW_LAMBDAS, instance.instance_id)]


def _steiner(instance: Instance, j: int | None) -> list[CheckReport]:
    K, T = instance.payload
    iid = instance.instance_id
    axis = int(iid.rsplit("-", 1)[-1]) % K.dim
    _, iterated = iterated_symmetral(K, iid)
    return [
        steiner_volume_check(K, axis, SHADOW_LAMBDAS, iid),
        steiner_monotonicity_check(K, T, axis, j, iid),
        iterated,
    ]


def _kleitman(instance: Instance, j: int | None) -> list[CheckReport]:
    K, T = instance.payload
    iid = instance.instance_id
    reports = [reverse_kleitman_check(K, T, with_delta=True, instance_id=iid)]
    n = K.dim
    if n >= 2:
        reports.append(sandwich_check(K, range(n // 2), iid))
        difference = assembled_difference(K, T, DecompositionMode.SUM)
        reports.append(rogers_shephard_check(difference, range(n // 2), iid))
    return reports


def _random_points(instance: Instance, n: int, count: int) -> list[Point]:
    """Точки из [−2,2]^n со знаменателями до 16"""
    rng = random.Random(f"{instance.instance_id}:points")
    points = []
    for _ in range(count):
        point = []
        for _ in range(n):
            denominator = rng.randint(1, 16)
            point.append(Fraction(rng.randint(-2 * denominator, 2 * denominator), denominator))
        points.append(tuple(point))
    return points


def _cone_dissect(instance: Instance, j: int | None) -> list[CheckReport]:
    C, K, L = instance.payload
    iid = instance.instance_id
    points = _random_points(instance, C.dim, NEAREST_POINTS)
    return [
        cone_dissection_check(K, L, iid),
        nearest_point_check(C, points, iid),
        dissection_of_space_check(C, points, iid),
        polytope_projection_check(K, points[:POLYTOPE_POINTS], iid),
    ]


def _stanley_volume(instance: Instance, j: int | None) -> list[CheckReport]:
    (P,) = instance.payload
    iid = instance.instance_id
    reports = [chain_volume_check(P, iid)]
    if P.n <= MAX_ORACLE_SIZE:
        reports.append(extensions_oracle_check(P, iid))
    return reports


def _sidorenko(instance: Instance, j: int | None) -> list[CheckReport]:
    (pi,) = instance.payload
    iid = instance.instance_id
    return [
        sidorenko_suite(pi, pi, 0 if j is None else j, iid),
        stable_set_duality_check(pi, iid),
    ]


def _mixed_sidorenko(instance: Instance, j: int | None) -> list[CheckReport]:
    pi, sigma = instance.payload
    return [
        sidorenko_suite(pi, sigma, k, instance.instance_id)
        for k in _j_values(pi.n, j)
    ]


def _logconcave(instance: Instance, j: int | None) -> list[CheckReport]:
    P, Q = instance.payload
    iid = instance.instance_id
    return [ej_sequence_props(DoublePoset(P, Q), iid), ej_sequence_props(DoublePoset(P, P), iid)]


def _bridge(instance: Instance, j: int | None) -> list[CheckReport]:
    P, Q = instance.payload
    return [ej_mixed_volume_check(DoublePoset(P, Q), instance.instance_id)]


SUITES: dict[str, Suite] = {
    suite.name: suite
    for suite in (
        Suite(
            "godbersen",
            CorpusKind.ANTIBLOCKING,
            False,
            (theorem.GODBERSEN_UPPER, theorem.GODBERSEN_LOWER),
            _godbersen,
            6,
            "Vol(K) ≤ V(K[j],−K[n−j]) ≤ binom(n,j)Vol(K)",
        ),
        Suite(
            "saint-raymond",
            CorpusKind.ANTIBLOCKING,
            False,
            (theorem.SAINT_RAYMOND, theorem.MIXED_SAINT_RAYMOND),
            _saint_raymond,
            6,
            "Vol(K)Vol(AK) ≥ 1/n!",
        ),
        Suite(
            "mixed-sr",
            CorpusKind.ANTIBLOCKING,
            True,
            (
                theorem.SAINT_RAYMOND,
                theorem.MIXED_SAINT_RAYMOND,
                theorem.MIXED_SAINT_RAYMOND_MULTI,
                theorem.DIFFERENCE_DISSECTION,
                theorem.HULL_DISSECTION,
                theorem.MIXED_VOLUME_FORMULA,
            ),
            _mixed_sr,
            5,
            "V(K[j],−T[n−j])V(AK[j],−AT[n−j]) ≥ 1/(j!(n−j)!) и разрезания K − T",
        ),
        Suite(
            "mahler-locally-ab",
            CorpusKind.LOCALLY_AB,
            False,
            (theorem.LOCAL_POLAR, theorem.LOCAL_MAHLER),
            _mahler_locally_ab,
            4,
            "Vol(K)Vol(K°) ≥ 4^n/n! для локально anti-blocking тел",
        ),
        Suite(
            "cbody-polar",
            CorpusKind.ANTIBLOCKING,
            True,
            (
                theorem.CAYLEY_POLAR,
                theorem.CAYLEY_PRODUCT_IDENTITY,
                theorem.CAYLEY_MAHLER_LAMBDA,
                theorem.CAYLEY_MAHLER_BOUND,
                theorem.CAYLEY_MAHLER_ASYMPTOTIC,
                theorem.JOIN_PRODUCT_BINOMIAL,
                theorem.JOIN_PRODUCT_CENTRAL,
                theorem.JOIN_PRODUCT_MAHLER,
            ),
            _cbody_polar,
            4,
            "C(K,−T)° = C(−2AT, 2AK) и оценки произведения Малера C-тел",
        ),
        Suite(
            "cbody-volume",
            CorpusKind.ANTIBLOCKING,
            True,
            (theorem.CAYLEY_VOLUME, theorem.CAYLEY_SLICE, theorem.CAYLEY_DISSECTION),
            _cbody_volume,
            4,
            "Vol(C(K,−T)) = 2/(n+1)·Σ_j V(K[j],−T[n−j])",
        ),
        Suite(
            "shadow",
            CorpusKind.ANTIBLOCKING,
            True,
            (theorem.SHADOW_INVARIANCE,),
            _shadow,
            4,
            "Vol(C_λ(K,−T)) не зависит от λ",
        ),
        Suite(
            "steiner",
            CorpusKind.ANTIBLOCKING,
            True,
            (
                theorem.STEINER_VOLUME,
                theorem.STEINER_MONOTONICITY,
                theorem.ITERATED_SYMMETRAL,
            ),
            _steiner,
            min(4, MAX_ORACLE_DIM),
            "Симметризации Штейнера сохраняют объём и уменьшают смешанные объёмы",
        ),
        Suite(
            "kleitman",
            CorpusKind.ANTIBLOCKING,
            True,
            (
                theorem.REVERSE_KLEITMAN_MIXED,
                theorem.REVERSE_KLEITMAN,
                theorem.ORDER_CONVEX_DIFFERENCE,
                theorem.ORDER_CONVEX_KLEITMAN,
                theorem.SANDWICH_INNER,
                theorem.SANDWICH_OUTER,
                theorem.ROGERS_SHEPHARD_SECTION,
                theorem.ROGERS_SHEPHARD_DIFFERENCE,
            ),
            _kleitman,
            4,
            "V(K[j],−T[n−j]) ≥ V(K[j],T[n−j]) и Vol(K−T) ≥ Vol(K+T)",
        ),
        Suite(
            "cone-dissect",
            CorpusKind.CONE,
            False,
            (
                theorem.CONE_DISSECTION,
                theorem.CONE_MIXED_VOLUME,
                theorem.CONE_DIFFERENCE_HAT,
                theorem.CONE_DUALITY,
                theorem.NEAREST_POINT,
                theorem.SPACE_DISSECTION,
                theorem.POLYTOPE_PROJECTION,
            ),
            _cone_dissect,
            4,
            "Разбиение K − L по граням конуса и проекции на конус",
        ),
        Suite(
            "stanley-volume",
            CorpusKind.POSET,
            False,
            (
                theorem.CHAIN_VOLUME,
                theorem.STABLE_SET_DUALITY,
                theorem.EXTENSIONS_ORACLE,
            ),
            _stanley_volume,
            6,
            "n!·Vol(C(P)) = e(P)",
        ),
        Suite(
            "sidorenko",
            CorpusKind.PERMUTATION,
            False,
            (
                theorem.SIDORENKO,
                theorem.WEAK_ORDER,
                theorem.WEAK_ORDER_EXTENSIONS,
                theorem.MIXED_SIDORENKO,
                theorem.SPLIT_EXTENSION_COUNT,
                theorem.EJ_ORACLE,
                theorem.STABLE_SET_DUALITY,
            ),
            _sidorenko,
            6,
            "e(P_π)e(P_π̄) ≥ n!, равенство для последовательно-параллельных P_π",
        ),
        Suite(
            "mixed-sidorenko",
            CorpusKind.PERMUTATION,
            True,
            (
                theorem.SIDORENKO,
                theorem.WEAK_ORDER,
                theorem.WEAK_ORDER_EXTENSIONS,
                theorem.MIXED_SIDORENKO,
                theorem.SPLIT_EXTENSION_COUNT,
                theorem.EJ_ORACLE,
            ),
            _mixed_sidorenko,
            6,
            "e_j(P_π,P_σ)e_j(P_π̄,P_σ̄) ≥ n!·binom(n,j)",
        ),
        Suite(
            "logconcave",
            CorpusKind.POSET,
            True,
            (
                theorem.EJ_LOG_CONCAVE,
                theorem.EJ_ANTICHAIN_FACTOR,
                theorem.EJ_PALINDROMIC,
                theorem.EJ_LOWER,
                theorem.EJ_UPPER,
            ),
            _logconcave,
            8,
            "Логарифмическая вогнутость и палиндромность e_j(P,Q)",
        ),
        Suite(
            "bridge-ej-mixedvol",
            CorpusKind.POSET,
            True,
            (theorem.EJ_MIXED_VOLUME,),
            _bridge,
            5,
            "e_j(P,Q) = n!·V(C(P)[j], −C(Q)[n−j])",
        ),
    )
}


def get_suite(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError:
        raise ConfigurationError(
            f"Неизвестный набор {name!r}; доступны: {', '.join(SUITES)}."
        )


def registry_json() -> list[dict]:
    return [
        {
            "suite": suite.name,
            "kind": suite.kind.value,
            "pairs": suite.pairs,
            "max_n": suite.max_n,
            "theorems": list(suite.theorems),
            "description": suite.description,
        }
        for suite in SUITES.values()
    ]
