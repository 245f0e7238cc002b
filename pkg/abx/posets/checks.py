"""
Проверки неравенств Сидоренко и свойств последовательности e_j(P,Q).

    e(P_π)·e(P_π̄) ≥ n!, равенство ⇔ P_π последовательно-параллельно
    e_j(P_π,P_σ)·e_j(P_π̄,P_σ̄) ≥ n!·binom(n,j)
    e_j(P,Q) = n!·V(C(P)[j], −C(Q)[n−j])
"""

from math import comb, factorial

from abx.antiblocking import abdual, mixed_volume_ab
from abx.exception import PosetError
from abx.posets.extensions import (
    MAX_ORACLE_SIZE,
    brute_force_linear_extensions,
    common_split_extensions,
    count_linear_extensions,
    e_j_double,
    e_j_permutation_oracle,
    e_j_sequence,
    is_series_parallel,
    weak_order_interval,
)
from abx.posets.polytopes import MAX_VOLUME_SIZE, chain_polytope, stable_set_polytope
from abx.posets.poset import (
    DoublePoset,
    Permutation,
    Poset,
    antichain,
    chain,
    permutation_to_json,
    poset_from_permutation,
    poset_to_json,
)
from abx.records import CheckReport, Relation, make_record, theorem

__all__ = (
    "chain_volume_check",
    "extensions_oracle_check",
    "stable_set_duality_check",
    "sidorenko_suite",
    "ej_sequence_props",
    "ej_mixed_volume_check",
)


def chain_volume_check(P: Poset, instance_id: str = "") -> CheckReport:
    """n!·Vol(C(P)) = e(P) и C(P) = Stab_{G(P)}"""
    if P.n > MAX_VOLUME_SIZE:
        raise PosetError(f"Точный объём ограничен размером {MAX_VOLUME_SIZE}.")
    body = chain_polytope(P)
    witness = {"instance_id": instance_id, "poset": poset_to_json(P)}
    stab = stable_set_polytope(P.comparability_graph())
    same = stab == body
    report = CheckReport(
        instance_id=instance_id,
        records=[
            make_record(
                instance_id,
                theorem.CHAIN_VOLUME,
                factorial(P.n) * body.volume,
                count_linear_extensions(P),
                relation=Relation.EQ,
                witness=witness,
            ),
            make_record(
                instance_id,
                theorem.STABLE_SET_DUALITY,
                body.volume,
                stab.volume,
                relation=Relation.SAME,
                holds=same,
                equality=same,
                witness=witness,
            ),
        ],
    )
    report.values["e"] = count_linear_extensions(P)
    return report


def extensions_oracle_check(P: Poset, instance_id: str = "") -> CheckReport:
    """Динамика по идеалам совпадает с перебором топологических сортировок"""
    record = make_record(
        instance_id,
        theorem.EXTENSIONS_ORACLE,
        count_linear_extensions(P),
        brute_force_linear_extensions(P),
        relation=Relation.EQ,
        witness={"instance_id": instance_id, "poset": poset_to_json(P)},
    )
    return CheckReport(instance_id=instance_id, records=[record])


def stable_set_duality_check(pi: Permutation, instance_id: str = "") -> CheckReport:
    """A·C(P_π) = Stab_{Ḡ(P_π)} = C(P_π̄)"""
    P = poset_from_permutation(pi)
    dual = abdual(chain_polytope(P))
    expected = stable_set_polytope(P.cocomparability_graph())
    complement_chain = chain_polytope(poset_from_permutation(pi.complement()))
    witness = {"instance_id": instance_id, "pi": permutation_to_json(pi)}
    report = CheckReport(instance_id=instance_id)
    for other in (expected, complement_chain):
        same = dual == other
        report.records.append(
            make_record(
                instance_id,
                theorem.STABLE_SET_DUALITY,
                dual.volume,
                other.volume,
                relation=Relation.SAME,
                holds=same,
                equality=same,
                witness=witness,
            )
        )
    return report


def sidorenko_suite(
    pi: Permutation, sigma: Permutation, j: int, instance_id: str = ""
) -> CheckReport:
    """Неравенство Сидоренко, его форма через слабый порядок и смешанный вариант

    Пример:

        sidorenko_suite(Permutation.of([2, 1, 3]), Permutation.identity(3), 1)
        >>> запись sidorenko: lhs 6, rhs 6, equality, series_parallel
    """
    if pi.n != sigma.n:
        raise PosetError(f"Перестановки разной длины: {pi.n} и {sigma.n}.")
    n = pi.n
    if not 0 <= j <= n:
        raise PosetError(f"j = {j} вне диапазона [0, {n}].")
    P, P_bar = poset_from_permutation(pi), poset_from_permutation(pi.complement())
    e, e_bar = count_linear_extensions(P), count_linear_extensions(P_bar)
    witness = {
        "instance_id": instance_id,
        "pi": permutation_to_json(pi),
        "sigma": permutation_to_json(sigma),
        "j": j,
    }
    report = CheckReport(instance_id=instance_id)
    sidorenko = make_record(
        instance_id, theorem.SIDORENKO, e * e_bar, factorial(n), witness=witness
    )
    series_parallel = is_series_parallel(P)
    report.records.append(sidorenko)
    report.flags.update(
        series_parallel=series_parallel,
        sidorenko_equality=sidorenko.equality,
        equality_matches=sidorenko.equality == series_parallel,
    )

    D = DoublePoset.from_permutations(pi, sigma)
    D_bar = DoublePoset.from_permutations(pi.complement(), sigma.complement())
    e_j, e_j_bar = e_j_double(D, j), e_j_double(D_bar, j)
    mixed = make_record(
        instance_id,
        theorem.MIXED_SIDORENKO,
        e_j * e_j_bar,
        factorial(n) * comb(n, j),
        witness=witness,
    )
    report.records.append(mixed)
    report.flags["mixed_equality"] = mixed.equality
    report.values.update(e=e, e_complement=e_bar, e_j=e_j, e_j_complement=e_j_bar)

    if n <= MAX_ORACLE_SIZE:
        below, above = weak_order_interval(pi)
        report.records += [
            make_record(
                instance_id, theorem.WEAK_ORDER, below * above, factorial(n), witness=witness
            ),
            make_record(
                instance_id,
                theorem.WEAK_ORDER_EXTENSIONS,
                below,
                e,
                relation=Relation.EQ,
                witness=witness,
            ),
            make_record(
                instance_id,
                theorem.SPLIT_EXTENSION_COUNT,
                common_split_extensions(pi, sigma, j),
                comb(n, j),
                relation=Relation.EQ,
                witness=witness,
            ),
            make_record(
                instance_id,
                theorem.EJ_ORACLE,
                e_j,
                e_j_permutation_oracle(D, j),
                relation=Relation.EQ,
                witness=witness,
            ),
        ]
    return report


def ej_sequence_props(D: DoublePoset, instance_id: str = "") -> CheckReport:
    """Логарифмическая вогнутость e_j(P,Q) и, для P = Q, палиндромность и границы

    Пример:

        ej_sequence_props(DoublePoset(chain(3), chain(3))).values
        >>> e_0 = 1, e_1 = 3, e_2 = 3, e_3 = 1
    """
    n = D.n
    seq = e_j_sequence(D)
    witness = {
        "instance_id": instance_id,
        "P": poset_to_json(D.P),
        "Q": poset_to_json(D.Q),
    }
    report = CheckReport(instance_id=instance_id)
    report.values.update({f"e_{j}": value for j, value in enumerate(seq)})
    for j in range(1, n):
        report.records.append(
            make_record(
                instance_id,
                theorem.EJ_LOG_CONCAVE,
                seq[j] ** 2,
                seq[j - 1] * seq[j + 1],
                witness=witness,
            )
        )

    # Q = A_n и Q = C_n дают одну и ту же сумму Σ_J e(P|_J) с множителем (n−j)!
    with_antichain = e_j_sequence(DoublePoset(D.P, antichain(n)))
    with_chain = e_j_sequence(DoublePoset(D.P, chain(n)))
    for j in range(n + 1):
        report.records.append(
            make_record(
                instance_id,
                theorem.EJ_ANTICHAIN_FACTOR,
                with_antichain[j],
                factorial(n - j) * with_chain[j],
                relation=Relation.EQ,
                witness=witness,
            )
        )

    if D.P != D.Q:
        return report
    e = count_linear_extensions(D.P)
    lower_matches = upper_matches = True
    for j in range(n + 1):
        report.records.append(
            make_record(
                instance_id,
                theorem.EJ_PALINDROMIC,
                seq[j],
                seq[n - j],
                relation=Relation.EQ,
                witness=witness,
            )
        )
        lower = make_record(instance_id, theorem.EJ_LOWER, seq[j], e, witness=witness)
        upper = make_record(
            instance_id, theorem.EJ_UPPER, comb(n, j) * e, seq[j], witness=witness
        )
        report.records += [lower, upper]
        if 0 < j < n:
            lower_matches &= lower.equality == D.P.is_antichain
            upper_matches &= upper.equality == D.P.is_chain
    report.flags.update(
        is_antichain=D.P.is_antichain,
        is_chain=D.P.is_chain,
        lower_equality_matches=lower_matches,
        upper_equality_matches=upper_matches,
    )
    return report


def ej_mixed_volume_check(D: DoublePoset, instance_id: str = "") -> CheckReport:
    """e_j(P,Q) = n!·V(C(P)[j], −C(Q)[n−j]) для всех j"""
    n = D.n
    if n > MAX_VOLUME_SIZE:
        raise PosetError(f"Точный объём ограничен размером {MAX_VOLUME_SIZE}.")
    K, T = chain_polytope(D.P), chain_polytope(D.Q)
    report = CheckReport(instance_id=instance_id)
    for j in range(n + 1):
        report.records.append(
            make_record(
                instance_id,
                theorem.EJ_MIXED_VOLUME,
                e_j_double(D, j),
                factorial(n) * mixed_volume_ab(K, T, j),
                relation=Relation.EQ,
                witness=lambda: {
                    "instance_id": instance_id,
                    "P": poset_to_json(D.P),
                    "Q": poset_to_json(D.Q),
                },
            )
        )
    return report
