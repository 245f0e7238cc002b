"""
Точные рациональные скаляры и точки.

Единственная числовая система ядра: `fractions.Fraction`.
Точка хранится как кортеж дробей фиксированной длины.
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence, TypeAlias

from abx.exception import DimensionMismatchError, GeometryError

Rational: TypeAlias = Fraction
Point: TypeAlias = tuple[Fraction, ...]

__all__ = (
    "Rational",
    "Point",
    "to_rational",
    "format_rational",
    "make_point",
    "point_from_strings",
    "point_to_strings",
    "dot",
    "add",
    "sub",
    "scale_point",
    "neg",
    "common_denominator",
    "primitive_vector",
    "unit_vector",
    "zero_point",
    "mask_point",
)


def to_rational(value: str | int | Fraction) -> Fraction:
    """Разобрать рациональное число из строки вида "p/q" или "p"

    >>> to_rational("3/2")
    Fraction(3, 2)
    """
    if isinstance(value, bool):
        raise GeometryError(f"Ожидалось рациональное число, получено {value!r}.")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise GeometryError(f"Не удалось разобрать рациональное число {value!r}.")
    raise GeometryError(f"Ожидалось рациональное число, получено {value!r}.")


def format_rational(value: Fraction) -> str:
    """Строка "p/q" или "p" для целых"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def make_point(coords: Iterable[str | int | Fraction]) -> Point:
    return tuple(to_rational(c) for c in coords)


def point_from_strings(coords: Sequence[str]) -> Point:
    return make_point(coords)


def point_to_strings(point: Point) -> list[str]:
    return [format_rational(c) for c in point]


def _check_same(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise DimensionMismatchError(
            f"Размерности точек не совпадают: {len(a)} и {len(b)}."
        )


def dot(a: Sequence, b: Sequence):
    _check_same(a, b)
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def add(a: Point, b: Point) -> Point:
    _check_same(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Point, b: Point) -> Point:
    _check_same(a, b)
    return tuple(x - y for x, y in zip(a, b))


def scale_point(point: Point, factor: Fraction) -> Point:
    return tuple(factor * x for x in point)


def neg(point: Point) -> Point:
    return tuple(-x for x in point)


def zero_point(dim: int) -> Point:
    return tuple(Fraction(0) for _ in range(dim))


def unit_vector(dim: int, index: int) -> Point:
    return tuple(Fraction(1 if i == index else 0) for i in range(dim))


def mask_point(point: Point, keep: Iterable[int]) -> Point:
    """Обнулить координаты вне множества keep"""
    keep = set(keep)
    return tuple(x if i in keep else Fraction(0) for i, x in enumerate(point))


def common_denominator(points: Iterable[Sequence[Fraction]]) -> int:
    """НОК знаменателей всех координат"""
    return reduce(
        lcm,
        (Fraction(x).denominator for point in points for x in point),
        1,
    )


def primitive_vector(vector: Sequence[Fraction | int]) -> tuple[int, ...]:
    """Целочисленный вектор того же направления с взаимно простыми координатами"""
    values = [Fraction(x) for x in vector]
    denominator = reduce(lcm, (x.denominator for x in values), 1)
    ints = [int(x * denominator) for x in values]
    divisor = reduce(gcd, (abs(x) for x in ints), 0)
    if divisor == 0:
        return tuple(ints)
    return tuple(x // divisor for x in ints)
