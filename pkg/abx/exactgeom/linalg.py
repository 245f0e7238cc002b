"""Точная линейная алгебра над Q и Z"""

from fractions import Fraction
from typing import Sequence

from abx.exactgeom.rational import primitive_vector

__all__ = (
    "rref",
    "matrix_rank",
    "nullspace",
    "integer_det",
    "rational_det",
    "solve_square",
    "independent_rows",
    "hyperplane_normal",
    "orthogonal_projection",
)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Приведённый ступенчатый вид и список ведущих столбцов"""
    matrix = [[Fraction(x) for x in row] for row in rows]
    if not matrix:
        return [], []
    ncols = len(matrix[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][c] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        lead = matrix[r][c]
        matrix[r] = [x / lead for x in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][c] != 0:
                factor = matrix[i][c]
                matrix[i] = [x - factor * y for x, y in zip(matrix[i], matrix[r])]
        pivots.append(c)
        r += 1
        if r == len(matrix):
            break
    return matrix[:r], pivots


def matrix_rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[tuple[int, ...]]:
    """Базис ядра из примитивных целочисленных векторов"""
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vector = [Fraction(0)] * ncols
        vector[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vector[p] = -row[f]
        basis.append(primitive_vector(vector))
    return basis


def integer_det(matrix: Sequence[Sequence[int]]) -> int:
    """Определитель целочисленной матрицы (алгоритм Барейса)"""
    m = [list(row) for row in matrix]
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // previous
        previous = m[k][k]
    return sign * m[size - 1][size - 1]


def rational_det(matrix: Sequence[Sequence]) -> Fraction:
    m = [[Fraction(x) for x in row] for row in matrix]
    size = len(m)
    result = Fraction(1)
    for k in range(size):
        pivot = next((i for i in range(k, size) if m[i][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            result = -result
        result *= m[k][k]
        for i in range(k + 1, size):
            factor = m[i][k] / m[k][k]
            if factor:
                m[i] = [x - factor * y for x, y in zip(m[i], m[k])]
    return result


def solve_square(matrix: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...] | None:
    """Решить квадратную систему; None для вырожденной матрицы"""
    size = len(matrix)
    augmented = [list(row) + [value] for row, value in zip(matrix, rhs)]
    reduced, pivots = rref(augmented)
    if pivots[:size] != list(range(size)) or len(pivots) > size:
        return None
    return tuple(reduced[i][size] for i in range(size))


def independent_rows(rows: Sequence[Sequence]) -> list[int]:
    """Индексы жадно выбранной максимальной линейно независимой подсистемы строк"""
    chosen: list[int] = []
    basis: list[tuple[list[Fraction], int]] = []
    for index, row in enumerate(rows):
        vector = [Fraction(x) for x in row]
        for reducer, p in basis:
            if vector[p] != 0:
                factor = vector[p]
                vector = [x - factor * y for x, y in zip(vector, reducer)]
        lead = next((i for i, x in enumerate(vector) if x != 0), None)
        if lead is None:
            continue
        vector = [x / vector[lead] for x in vector]
        # поддерживаем базис приведённым по ведущим позициям
        basis = [
            ([x - r[lead] * y for x, y in zip(r, vector)], p) for r, p in basis
        ]
        basis.append((vector, lead))
        chosen.append(index)
    return chosen


def hyperplane_normal(points: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Нормаль гиперплоскости через d точек в Z^d по формуле кофакторов"""
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    d = len(base)
    normal = []
    for i in range(d):
        minor = [row[:i] + row[i + 1 :] for row in diffs]
        value = integer_det(minor)
        normal.append(value if i % 2 == 0 else -value)
    return primitive_vector(normal)


def orthogonal_projection(point: Sequence, basis: Sequence[Sequence]) -> tuple[Fraction, ...]:
    """Ортогональная проекция точки на линейную оболочку базиса"""
    if not basis:
        return tuple(Fraction(0) for _ in point)
    gram = [[sum(Fraction(a) * b for a, b in zip(u, v)) for v in basis] for u in basis]
    rhs = [sum(Fraction(a) * b for a, b in zip(u, point)) for u in basis]
    coeffs = solve_square(gram, rhs)
    return tuple(
        sum((c * Fraction(u[i]) for c, u in zip(coeffs, basis)), Fraction(0))
        for i in range(len(point))
    )
