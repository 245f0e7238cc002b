"""Распознавание симплексов, брусов и редуцированных многогранников Ханнера"""

from fractions import Fraction
from itertools import combinations, product

from abx.antiblocking.body import AntiBlockingBody
from abx.exactgeom import Point, Polytope, canonical_hull, mask_point

__all__ = (
    "is_simplex",
    "is_box",
    "has_center_of_symmetry",
    "is_reduced_hanner",
)


def is_simplex(K: AntiBlockingBody) -> bool:
    """K = conv{0, a_1 e_1, …, a_n e_n} с a_i > 0"""
    n = K.dim
    vertices = K.vertices
    if len(vertices) != n + 1 or tuple(Fraction(0) for _ in range(n)) not in vertices:
        return False
    axes = set()
    for v in vertices:
        support = [i for i, x in enumerate(v) if x != 0]
        if len(support) > 1:
            return False
        axes.update(support)
    return len(axes) == n


def is_box(K: AntiBlockingBody) -> bool:
    """K = [0,a_1] × … × [0,a_n] с a_i > 0"""
    if len(K.generators) != 1:
        return False
    (g,) = K.generators
    if any(x == 0 for x in g):
        return False
    masks = {
        mask_point(g, [i for i, flag in enumerate(flags) if flag])
        for flags in product((False, True), repeat=K.dim)
    }
    return masks == set(K.vertices)


def has_center_of_symmetry(P: Polytope | AntiBlockingBody) -> bool:
    """Центрально-симметричен ли многогранник (центр это центроид вершин)"""
    if isinstance(P, AntiBlockingBody):
        P = P.body
    if P.is_empty:
        return False
    count = len(P.vertices)
    center2 = tuple(
        2 * sum((v[i] for v in P.vertices), Fraction(0)) / count for i in range(P.dim)
    )
    vertices = set(P.vertices)
    return all(tuple(c - x for c, x in zip(center2, v)) in vertices for v in vertices)


def _restrict(vertices: frozenset[Point], axes: tuple[int, ...]) -> frozenset[Point]:
    """Вершины координатной проекции (она же сечение для anti-blocking тела)"""
    return frozenset(canonical_hull(tuple(v[i] for i in axes) for v in vertices).vertices)


def _hanner(vertices: frozenset[Point], k: int, scaled: bool) -> bool:
    if k == 1:
        values = sorted(v[0] for v in vertices)
        if len(values) != 2 or values[0] != 0:
            return False
        return values[1] > 0 if scaled else values[1] == 1
    rest = tuple(range(1, k))
    for size in range(0, k - 1):
        for extra in combinations(rest, size):
            E = (0,) + extra
            F = tuple(i for i in range(k) if i not in E)
            A = _restrict(vertices, E)
            B = _restrict(vertices, F)

            def lift(a, b):
                full = [Fraction(0)] * k
                for value, axis in zip(a, E):
                    full[axis] = value
                for value, axis in zip(b, F):
                    full[axis] = value
                return tuple(full)

            zero_a = tuple(Fraction(0) for _ in E)
            zero_b = tuple(Fraction(0) for _ in F)
            as_product = frozenset(lift(a, b) for a in A for b in B)
            as_join = frozenset(
                [lift(a, zero_b) for a in A] + [lift(zero_a, b) for b in B]
            )
            if vertices in (as_product, as_join):
                if _hanner(A, len(E), scaled) and _hanner(B, len(F), scaled):
                    return True
    return False


def is_reduced_hanner(K: AntiBlockingBody, scaled: bool = False) -> bool:
    """Редуцированный многогранник Ханнера

    Строится из отрезков [0,1] координатными произведениями и оболочками.
    При scaled=True допускаются отрезки [0,a], то есть образы
    при положительных диагональных растяжениях.
    """
    if K.dim == 0 or not K.is_full_dimensional:
        return False
    return _hanner(frozenset(K.vertices), K.dim, scaled)
