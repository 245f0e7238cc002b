"""
Anti-blocking и локально anti-blocking тела.

Тело K ⊆ R^n_+ называется anti-blocking, если вместе с каждой точкой x
оно содержит все y с 0 ≤ y ≤ x. Для многогранника достаточно проверить,
что обнуление любой координаты любой вершины оставляет точку в K.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping, Sequence, TypeAlias

from abx.exactgeom import (
    Point,
    Polytope,
    canonical_hull,
    contains_point,
    from_inequalities,
    make_point,
    mask_point,
    polytope_to_json,
    reflect,
    volume,
)
from abx.exception import (
    DimensionMismatchError,
    GeometryError,
    NotAntiBlockingError,
    NotLocallyAntiBlockingError,
)

SignVector: TypeAlias = tuple[int, ...]

__all__ = (
    "SignVector",
    "make_sign_vector",
    "sign_vectors",
    "sign_vector_of",
    "positive_support",
    "dominates",
    "maximal_points",
    "validate_antiblocking",
    "AntiBlockingBody",
    "LocallyAntiBlockingBody",
    "down_closure",
    "unconditional_closure",
    "orthant_piece",
    "antiblocking_to_json",
)


def make_sign_vector(signs: Iterable[int]) -> SignVector:
    signs = tuple(int(s) for s in signs)
    if any(s not in (-1, 1) for s in signs):
        raise GeometryError(f"Вектор знаков должен состоять из ±1: {signs}.")
    return signs


def sign_vectors(n: int) -> list[SignVector]:
    """Все 2^n векторов знаков в фиксированном порядке"""
    return [tuple(s) for s in product((1, -1), repeat=n)]


def sign_vector_of(E: Iterable[int], n: int) -> SignVector:
    """σ(E): +1 на координатах E, −1 вне E"""
    E = set(E)
    return tuple(1 if i in E else -1 for i in range(n))


def positive_support(sigma: SignVector) -> tuple[int, ...]:
    return tuple(i for i, s in enumerate(sigma) if s > 0)


def dominates(u: Point, v: Point) -> bool:
    """v ⪯ u покоординатно"""
    return all(a >= b for a, b in zip(u, v))


def maximal_points(points: Sequence[Point]) -> tuple[Point, ...]:
    """⪯-максимальные точки в лексикографическом порядке"""
    unique = sorted(set(points))
    return tuple(
        v for v in unique if not any(u != v and dominates(u, v) for u in unique)
    )


def validate_antiblocking(P: Polytope) -> None:
    if P.is_empty:
        raise NotAntiBlockingError("Пустое множество не является телом.")
    for v in P.vertices:
        if any(x < 0 for x in v):
            raise NotAntiBlockingError(f"Вершина {v} вне R^n_+.")
        for i, x in enumerate(v):
            if x == 0:
                continue
            masked = tuple(Fraction(0) if k == i else y for k, y in enumerate(v))
            if not contains_point(P, masked):
                raise NotAntiBlockingError(
                    f"Тело не замкнуто вниз: {masked} не лежит в теле."
                )


@dataclass(frozen=True, eq=False)
class AntiBlockingBody:
    """Проверенное anti-blocking тело и его ⪯-максимальные вершины"""

    body: Polytope
    generators: tuple[Point, ...]
    _projections: dict = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def from_polytope(cls, P: Polytope) -> "AntiBlockingBody":
        validate_antiblocking(P)
        return cls(P, maximal_points(P.vertices))

    @classmethod
    def trusted(cls, P: Polytope) -> "AntiBlockingBody":
        """Без проверки: для результатов операций, сохраняющих класс тел"""
        return cls(P, maximal_points(P.vertices))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AntiBlockingBody):
            return NotImplemented
        return self.body == other.body

    def __hash__(self) -> int:
        return hash(self.body)

    @property
    def dim(self) -> int:
        return self.body.dim

    @property
    def vertices(self) -> tuple[Point, ...]:
        return self.body.vertices

    @property
    def is_full_dimensional(self) -> bool:
        return self.body.is_full_dimensional

    @cached_property
    def volume(self) -> Fraction:
        return volume(self.body)

    def projection(self, E: Iterable[int]) -> Polytope:
        """P_E K = K ∩ E в |E|-мерных координатах"""
        E = tuple(sorted(set(E)))
        if E not in self._projections:
            self._projections[E] = canonical_hull(
                tuple(v[i] for i in E) for v in self.body.vertices
            )
        return self._projections[E]


def down_closure(U: Iterable[Sequence]) -> AntiBlockingBody:
    """{U}↓ = оболочка всех точек U с обнулёнными наборами координат

    Пример:

        down_closure([(1, 1), ("3/2", "1/2")])
        >>> пятиугольник (0,0), (0,1), (1,1), (3/2,0), (3/2,1/2) площади 11/8
    """
    points = [make_point(u) for u in U]
    if not points:
        raise GeometryError("Пустой набор образующих.")
    n = len(points[0])
    if any(len(p) != n for p in points):
        raise DimensionMismatchError()
    if any(x < 0 for p in points for x in p):
        raise NotAntiBlockingError("Образующие должны лежать в R^n_+.")
    candidates = set()
    for p in maximal_points(points):
        support = [i for i, x in enumerate(p) if x != 0]
        for mask in product((False, True), repeat=len(support)):
            keep = [i for i, flag in zip(support, mask) if flag]
            candidates.add(mask_point(p, keep))
    body = AntiBlockingBody.from_polytope(canonical_hull(candidates))
    return body


def orthant_piece(P: Polytope, sigma: SignVector) -> Polytope:
    """σ(P ∩ σR^n_+): часть тела в ортанте σ, отражённая в R^n_+"""
    orthant = [
        (tuple(Fraction(-s) if k == i else Fraction(0) for k in range(P.dim)), Fraction(0))
        for i, s in enumerate(sigma)
    ]
    part = from_inequalities(P.dim, list(P.facets) + orthant, P.equations)
    return reflect(part, sigma)


@dataclass(frozen=True, eq=False)
class LocallyAntiBlockingBody:
    """Тело, пересечение которого с каждым ортантом после отражения anti-blocking"""

    dim: int
    assembled: Polytope
    pieces: Mapping[SignVector, AntiBlockingBody]

    @classmethod
    def from_polytope(cls, P: Polytope) -> "LocallyAntiBlockingBody":
        pieces = {}
        for sigma in sign_vectors(P.dim):
            try:
                pieces[sigma] = AntiBlockingBody.from_polytope(orthant_piece(P, sigma))
            except NotAntiBlockingError as exc:
                raise NotLocallyAntiBlockingError(
                    f"Часть в ортанте {sigma}: {exc.message}"
                )
        return cls(P.dim, P, pieces)

    @classmethod
    def from_pieces(
        cls, dim: int, pieces: Mapping[SignVector, AntiBlockingBody]
    ) -> "LocallyAntiBlockingBody":
        """Собрать тело из карты частей с проверкой согласованности"""
        if set(pieces) != set(sign_vectors(dim)):
            raise NotLocallyAntiBlockingError("Нужны части для всех 2^n ортантов.")
        assembled = canonical_hull(
            v
            for sigma, piece in pieces.items()
            for v in reflect(piece.body, sigma).vertices
        )
        result = cls(dim, assembled, dict(pieces))
        result.validate()
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LocallyAntiBlockingBody):
            return NotImplemented
        return self.assembled == other.assembled

    def __hash__(self) -> int:
        return hash(self.assembled)

    @cached_property
    def volume(self) -> Fraction:
        return volume(self.assembled)

    def piece_volume_sum(self) -> Fraction:
        return sum((piece.volume for piece in self.pieces.values()), Fraction(0))

    def validate(self) -> None:
        """Части совпадают с пересечениями собранного тела с ортантами"""
        for sigma in sign_vectors(self.dim):
            expected = orthant_piece(self.assembled, sigma)
            if expected != self.pieces[sigma].body:
                raise NotLocallyAntiBlockingError(
                    f"Часть в ортанте {sigma} не согласована с собранным телом."
                )
        if self.piece_volume_sum() != self.volume:
            raise NotLocallyAntiBlockingError("Объёмы частей не складываются в объём тела.")


def unconditional_closure(K: AntiBlockingBody) -> LocallyAntiBlockingBody:
    """K̂ = ∪_σ σK"""
    assembled = canonical_hull(
        tuple(s * x for s, x in zip(sigma, v))
        for sigma in sign_vectors(K.dim)
        for v in K.vertices
    )
    return LocallyAntiBlockingBody(
        K.dim, assembled, {sigma: K for sigma in sign_vectors(K.dim)}
    )


def antiblocking_to_json(K: AntiBlockingBody) -> dict:
    data = polytope_to_json(K.body)
    data["generators"] = [[str(x) for x in g] for g in K.generators]
    return data
