"""
Рациональные интервалы, заведомо содержащие иррациональные константы.

Корни и π вычисляются в интервальной арифметике mpmath с направленным
округлением, концы переводятся в Fraction без потерь. Дальше все
операции с интервалами рациональные. Неравенство вида X ≥ c считается
выполненным, только если X ≥ high(c).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, isqrt

from mpmath import iv, libmp

from abx.exception import GeometryError

__all__ = (
    "PRECISION",
    "Interval",
    "sqrt_interval",
    "pi_interval",
    "binomial_root_sum",
    "join_product_binomial_bound",
    "join_product_central_bound",
    "cbody_mahler_bound",
    "cbody_asymptotic_bound",
)

# Бит мантиссы: ширина интервалов много меньше 2^-64
PRECISION = 192


@dataclass(frozen=True)
class Interval:
    low: Fraction
    high: Fraction

    @classmethod
    def exact(cls, value) -> "Interval":
        value = Fraction(value)
        return cls(value, value)

    @property
    def width(self) -> Fraction:
        return self.high - self.low

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.low + other.low, self.high + other.high)

    def __mul__(self, other: "Interval") -> "Interval":
        # интервалы констант неотрицательны
        if self.low < 0 or other.low < 0:
            raise GeometryError("Умножение определено для неотрицательных интервалов.")
        return Interval(self.low * other.low, self.high * other.high)

    def scaled(self, factor) -> "Interval":
        factor = Fraction(factor)
        if factor < 0:
            raise GeometryError("Множитель должен быть неотрицательным.")
        return Interval(self.low * factor, self.high * factor)

    def __contains__(self, value) -> bool:
        return self.low <= Fraction(value) <= self.high


def _from_iv(value) -> Interval:
    low, high = (Fraction(*libmp.to_rational(end)) for end in value._mpi_)
    return Interval(low, high)


def _iv_rational(value: Fraction):
    return iv.mpf(value.numerator) / iv.mpf(value.denominator)


def sqrt_interval(value) -> Interval:
    """Интервал для √value; для квадратов рациональных чисел точный"""
    value = Fraction(value)
    if value < 0:
        raise GeometryError("Корень из отрицательного числа.")
    p, q = value.numerator, value.denominator
    if isqrt(p) ** 2 == p and isqrt(q) ** 2 == q:
        return Interval.exact(Fraction(isqrt(p), isqrt(q)))
    previous = iv.prec
    iv.prec = PRECISION
    try:
        return _from_iv(iv.sqrt(_iv_rational(value)))
    finally:
        iv.prec = previous


def pi_interval() -> Interval:
    previous = iv.prec
    iv.prec = PRECISION
    try:
        return _from_iv(iv.pi)
    finally:
        iv.prec = previous


def binomial_root_sum(n: int) -> Interval:
    """Σ_j √binom(n,j)"""
    total = Interval.exact(0)
    for j in range(n + 1):
        total = total + sqrt_interval(comb(n, j))
    return total


def join_product_binomial_bound(n: int) -> Interval:
    """(1/n!)·(Σ_j √binom(n,j))²"""
    s = binomial_root_sum(n)
    return (s * s).scaled(Fraction(1, factorial(n)))


def join_product_central_bound(n: int) -> Interval:
    """(2^n/n!)·√(πn/2)"""
    root = _sqrt_of_interval(pi_interval().scaled(Fraction(n, 2)))
    return root.scaled(Fraction(2**n, factorial(n)))


def cbody_mahler_bound(n: int) -> Interval:
    """(2^{n+2}/((n+1)²·n!))·(Σ_j √binom(n,j))²"""
    s = binomial_root_sum(n)
    return (s * s).scaled(Fraction(2 ** (n + 2), (n + 1) ** 2 * factorial(n)))


def cbody_asymptotic_bound(n: int) -> Interval:
    """√(2πn)/(n+1) · 4^{n+1}/(n+1)!"""
    root = _sqrt_of_interval(pi_interval().scaled(2 * n))
    return root.scaled(Fraction(4 ** (n + 1), (n + 1) * factorial(n + 1)))


def _sqrt_of_interval(value: Interval) -> Interval:
    """√ монотонен: корень из концов с внешним округлением"""
    return Interval(sqrt_interval(value.low).low, sqrt_interval(value.high).high)
