"""
Многогранник с взаимно заверенными V- и H-представлениями.

Все конструкторы приводят многогранник к каноническому виду:
вершины это ровно крайние точки в лексикографическом порядке,
грани отсортированы, нормали это примитивные целые векторы.
Поэтому равенство многогранников есть равенство списков вершин.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Iterable, Sequence

from abx.exactgeom.ddmethod import polytope_vertices
from abx.exactgeom.hull import quickhull
from abx.exactgeom.linalg import (
    integer_det,
    matrix_rank,
    nullspace,
    rref,
    solve_square,
)
from abx.exactgeom.rational import (
    Point,
    add,
    common_denominator,
    dot,
    make_point,
    primitive_vector,
    sub,
)
from abx.exception import DimensionMismatchError, GeometryError, OriginNotInteriorError

MAX_DIM = 10

__all__ = (
    "MAX_DIM",
    "Facet",
    "Triangulation",
    "Polytope",
    "canonical_hull",
    "from_inequalities",
    "triangulate",
    "volume",
    "minkowski_sum",
    "scale",
    "negate",
    "reflect",
    "translate",
    "convex_union",
    "intersection",
    "polar",
    "project_section",
    "embed",
    "frame_coordinates",
    "frame_volume",
    "contains_point",
    "contains_polytope",
)


@dataclass(frozen=True, order=True)
class Facet:
    """Неравенство ⟨normal,x⟩ ≤ offset (или равенство для equations)"""

    normal: Point
    offset: Fraction


@dataclass(frozen=True)
class Triangulation:
    """Симплексы (индексы вершин) и их удвоенные до n! объёмы |det|"""

    simplices: tuple[tuple[int, ...], ...]
    determinants: tuple[Fraction, ...] = ()


@dataclass(frozen=True, eq=False)
class Polytope:
    dim: int
    vertices: tuple[Point, ...]
    facets: tuple[Facet, ...] = ()
    equations: tuple[Facet, ...] = ()
    is_canonical: bool = True
    # Симплициальная граница из оболочки, если её вершины совпали с крайними
    boundary: tuple[tuple[int, ...], ...] | None = field(
        default=None, repr=False, compare=False
    )

    @classmethod
    def empty(cls, dim: int) -> "Polytope":
        return cls(dim=dim, vertices=())

    @classmethod
    def point(cls, point: Sequence) -> "Polytope":
        return canonical_hull([point])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polytope):
            return NotImplemented
        return self.dim == other.dim and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash((self.dim, self.vertices))

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @cached_property
    def affine_dim(self) -> int:
        if self.is_empty:
            return -1
        base = self.vertices[0]
        return matrix_rank([sub(v, base) for v in self.vertices[1:]])

    @property
    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.dim

    @cached_property
    def denominator(self) -> int:
        return common_denominator(self.vertices)

    @cached_property
    def integer_vertices(self) -> tuple[tuple[int, ...], ...]:
        scale_ = self.denominator
        return tuple(tuple(int(x * scale_) for x in v) for v in self.vertices)

    @cached_property
    def triangulation(self) -> Triangulation:
        return triangulate(self)

    @cached_property
    def volume(self) -> Fraction:
        return volume(self)


def _check_dim(points: Sequence[Point]) -> int:
    dim = len(points[0])
    if any(len(p) != dim for p in points):
        raise DimensionMismatchError()
    if dim > MAX_DIM:
        raise GeometryError(f"Размерность {dim} больше допустимой {MAX_DIM}.")
    return dim


def _normalized_equation(normal: Sequence[int], offset: Fraction) -> Facet:
    lead = next(x for x in normal if x != 0)
    if lead < 0:
        normal = tuple(-x for x in normal)
        offset = -offset
    return Facet(tuple(Fraction(x) for x in normal), Fraction(offset))


def _hull_of_unique(dim: int, points: list[Point]) -> Polytope:
    """Каноническая оболочка попарно различных отсортированных точек"""
    if dim == 0:
        return Polytope(dim=0, vertices=((),))
    base = points[0]
    reduced, pivots = rref([sub(p, base) for p in points[1:]]) if len(points) > 1 else ([], [])
    rank = len(pivots)

    equations: tuple[Facet, ...] = ()
    if rank < dim:
        normals = nullspace(reduced, dim) if reduced else [
            tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)
        ]
        equations = tuple(
            sorted(_normalized_equation(a, dot(a, base)) for a in normals)
        )

    if rank == 0:
        return Polytope(dim=dim, vertices=(base,), equations=equations)

    def pad(normal: Sequence[int]) -> Point:
        full = [Fraction(0)] * dim
        for value, axis in zip(normal, pivots):
            full[axis] = Fraction(value)
        return tuple(full)

    projected = [tuple(p[i] for i in pivots) for p in points]

    if rank == 1:
        low = min(range(len(points)), key=lambda i: projected[i])
        high = max(range(len(points)), key=lambda i: projected[i])
        vertices = tuple(sorted({points[low], points[high]}))
        facets = tuple(
            sorted(
                [
                    Facet(pad((1,)), projected[high][0]),
                    Facet(pad((-1,)), -projected[low][0]),
                ]
            )
        )
        boundary = ((0,), (1,)) if dim == 1 else None
        return Polytope(dim, vertices, facets, equations, boundary=boundary)

    scale_ = common_denominator(projected)
    integral = [tuple(int(x * scale_) for x in p) for p in projected]
    hull = quickhull(integral)

    tight: dict[tuple[tuple[int, ...], int], set[int]] = {}
    for simplex, plane in zip(hull.simplices, hull.planes):
        tight.setdefault(plane, set()).update(simplex)
    incident: dict[int, list[tuple[int, ...]]] = {}
    for (normal, _), members in tight.items():
        for index in members:
            incident.setdefault(index, []).append(normal)
    extreme = sorted(i for i, normals in incident.items() if matrix_rank(normals) == rank)

    vertices = tuple(points[i] for i in extreme)
    facets = tuple(
        sorted(Facet(pad(normal), Fraction(offset, scale_)) for normal, offset in tight)
    )
    boundary = None
    used = {i for simplex in hull.simplices for i in simplex}
    if rank == dim and used == set(extreme):
        position = {index: k for k, index in enumerate(extreme)}
        boundary = tuple(tuple(position[i] for i in s) for s in hull.simplices)
    return Polytope(dim, vertices, facets, equations, boundary=boundary)


def canonical_hull(points: Iterable[Sequence]) -> Polytope:
    """Выпуклая оболочка конечного множества точек

    Пример:

        canonical_hull([(0, 0), (1, 0), (0, 1), ("1/2", "1/4")])
        >>> вершины (0,0), (0,1), (1,0); грани x≥0, y≥0, x+y≤1
    """
    points = [make_point(p) for p in points]
    if not points:
        raise GeometryError("Пустой список точек.")
    dim = _check_dim(points)
    return _hull_of_unique(dim, sorted(set(points)))


def from_inequalities(
    dim: int,
    inequalities: Iterable[tuple[Sequence, Fraction] | Facet],
    equations: Iterable[tuple[Sequence, Fraction] | Facet] = (),
) -> Polytope:
    """Перейти от H-представления к каноническому многограннику"""

    def split(items):
        rows = []
        for item in items:
            normal, offset = (item.normal, item.offset) if isinstance(item, Facet) else item
            normal = make_point(normal)
            if len(normal) != dim:
                raise DimensionMismatchError()
            rows.append((normal, Fraction(offset)))
        return rows

    inequalities = split(inequalities)
    equations = split(equations)
    active_ineq = []
    for normal, offset in inequalities:
        if any(normal):
            active_ineq.append((normal, offset))
        elif offset < 0:
            return Polytope.empty(dim)
    active_eq = []
    for normal, offset in equations:
        if any(normal):
            active_eq.append((normal, offset))
        elif offset != 0:
            return Polytope.empty(dim)
    vertices = polytope_vertices(dim, active_ineq, active_eq)
    if not vertices:
        return Polytope.empty(dim)
    return canonical_hull(vertices)


def triangulate(P: Polytope) -> Triangulation:
    """Веерная триангуляция из лексикографически наименьшей вершины"""
    if not P.is_canonical:
        raise GeometryError("Ожидался канонический многогранник.")
    if P.is_empty or not P.is_full_dimensional:
        return Triangulation(())
    n = P.dim
    if n == 0:
        return Triangulation(((0,),), (Fraction(1),))
    ints = P.integer_vertices
    if n == 1:
        return Triangulation(((0, 1),), (Fraction(ints[1][0] - ints[0][0]),))
    boundary = P.boundary
    if boundary is None:
        boundary = quickhull(ints).simplices
    apex = ints[0]
    simplices = []
    determinants = []
    for simplex in boundary:
        if 0 in simplex:
            continue
        det = abs(integer_det([[a - b for a, b in zip(ints[i], apex)] for i in simplex]))
        if det:
            simplices.append((0,) + tuple(simplex))
            determinants.append(Fraction(det))
    return Triangulation(tuple(simplices), tuple(determinants))


def volume(P: Polytope) -> Fraction:
    """Точный n-мерный объём; 0 для многогранников неполной размерности

    Пример:

        volume(canonical_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]))
        >>> Fraction(1, 6)
    """
    if not P.is_canonical:
        raise GeometryError("Ожидался канонический многогранник.")
    if P.is_empty or not P.is_full_dimensional:
        return Fraction(0)
    n = P.dim
    if n == 0:
        return Fraction(1)
    total = sum(P.triangulation.determinants, Fraction(0))
    return total / (factorial(n) * P.denominator**n)


def _same_dim(P: Polytope, Q: Polytope) -> None:
    if P.dim != Q.dim:
        raise DimensionMismatchError(
            f"Размерности многогранников не совпадают: {P.dim} и {Q.dim}."
        )


def minkowski_sum(P: Polytope, Q: Polytope) -> Polytope:
    """P + Q как оболочка попарных сумм вершин"""
    _same_dim(P, Q)
    if P.is_empty or Q.is_empty:
        return Polytope.empty(P.dim)
    return canonical_hull(add(p, q) for p in P.vertices for q in Q.vertices)


def scale(P: Polytope, factor) -> Polytope:
    factor = Fraction(factor)
    if factor < 0:
        return negate(scale(P, -factor))
    if P.is_empty:
        return P
    if factor == 0:
        return canonical_hull([tuple(Fraction(0) for _ in range(P.dim))])
    if not P.is_full_dimensional:
        return canonical_hull(tuple(factor * x for x in v) for v in P.vertices)
    return Polytope(
        P.dim,
        tuple(tuple(factor * x for x in v) for v in P.vertices),
        tuple(Facet(f.normal, factor * f.offset) for f in P.facets),
        boundary=P.boundary,
    )


def reflect(P: Polytope, signs: Sequence[int]) -> Polytope:
    """σP = {(σ_1 x_1, …, σ_n x_n)}"""
    if len(signs) != P.dim:
        raise DimensionMismatchError()
    if P.is_empty:
        return P
    if not P.is_full_dimensional:
        return canonical_hull(tuple(s * x for s, x in zip(signs, v)) for v in P.vertices)
    return Polytope(
        P.dim,
        tuple(sorted(tuple(s * x for s, x in zip(signs, v)) for v in P.vertices)),
        tuple(
            sorted(
                Facet(tuple(s * a for s, a in zip(signs, f.normal)), f.offset)
                for f in P.facets
            )
        ),
    )


def negate(P: Polytope) -> Polytope:
    return reflect(P, [-1] * P.dim)


def translate(P: Polytope, vector: Sequence) -> Polytope:
    vector = make_point(vector)
    if len(vector) != P.dim:
        raise DimensionMismatchError()
    if P.is_empty:
        return P
    if not P.is_full_dimensional:
        return canonical_hull(add(v, vector) for v in P.vertices)
    return Polytope(
        P.dim,
        tuple(add(v, vector) for v in P.vertices),
        tuple(Facet(f.normal, f.offset + dot(f.normal, vector)) for f in P.facets),
        boundary=P.boundary,
    )


def convex_union(P: Polytope, Q: Polytope) -> Polytope:
    """P ∨ Q = conv(P ∪ Q)"""
    _same_dim(P, Q)
    if P.is_empty:
        return Q
    if Q.is_empty:
        return P
    return canonical_hull(P.vertices + Q.vertices)


def intersection(P: Polytope, Q: Polytope) -> Polytope:
    _same_dim(P, Q)
    if P.is_empty or Q.is_empty:
        return Polytope.empty(P.dim)
    return from_inequalities(P.dim, P.facets + Q.facets, P.equations + Q.equations)


def contains_point(P: Polytope, point: Sequence) -> bool:
    point = make_point(point)
    if P.is_empty:
        return False
    return all(dot(f.normal, point) <= f.offset for f in P.facets) and all(
        dot(e.normal, point) == e.offset for e in P.equations
    )


def contains_polytope(P: Polytope, Q: Polytope) -> bool:
    """Q ⊆ P"""
    _same_dim(P, Q)
    return all(contains_point(P, v) for v in Q.vertices)


def polar(P: Polytope) -> Polytope:
    """P° = {y : ⟨y,x⟩ ≤ 1 для всех x ∈ P}

    Грань ⟨a,x⟩ ≤ b (b > 0) даёт вершину a/b, вершина v даёт грань ⟨v,y⟩ ≤ 1.
    """
    if P.is_empty or not P.is_full_dimensional:
        raise OriginNotInteriorError("Поляра определена только для полномерных тел.")
    if any(f.offset <= 0 for f in P.facets):
        raise OriginNotInteriorError()
    vertices = tuple(
        sorted(tuple(a / f.offset for a in f.normal) for f in P.facets)
    )
    facets = []
    for v in P.vertices:
        normal = primitive_vector(v)
        axis = next(i for i, x in enumerate(v) if x != 0)
        facets.append(
            Facet(tuple(Fraction(x) for x in normal), Fraction(normal[axis]) / v[axis])
        )
    return Polytope(P.dim, vertices, tuple(sorted(facets)))


def project_section(P: Polytope, J: Iterable[int]) -> tuple[Polytope, Polytope]:
    """Проекция на координатное подпространство E_J и сечение P ∩ E_J

    Оба результата выражены в |J|-мерной системе координат.
    """
    J = sorted(set(J))
    if any(j < 0 or j >= P.dim for j in J):
        raise GeometryError(f"Индексы координат {J} вне диапазона [0, {P.dim}).")
    k = len(J)
    if P.is_empty:
        return Polytope.empty(k), Polytope.empty(k)
    projection = canonical_hull(tuple(v[j] for j in J) for v in P.vertices)
    section = from_inequalities(
        k,
        [(tuple(f.normal[j] for j in J), f.offset) for f in P.facets],
        [(tuple(e.normal[j] for j in J), e.offset) for e in P.equations],
    )
    return projection, section


def embed(P: Polytope, J: Sequence[int], dim: int) -> Polytope:
    """Вложить многогранник из координат J в R^dim (остальные координаты нулевые)"""
    J = list(J)
    if len(J) != P.dim:
        raise DimensionMismatchError()
    if P.is_empty:
        return Polytope.empty(dim)

    def lift(v: Point) -> Point:
        full = [Fraction(0)] * dim
        for value, axis in zip(v, J):
            full[axis] = value
        return tuple(full)

    return canonical_hull(lift(v) for v in P.vertices)


def frame_coordinates(point: Sequence, basis: Sequence[Sequence]) -> Point:
    """Координаты точки линейной оболочки базиса в этом базисе"""
    gram = [[dot(make_point(u), make_point(v)) for v in basis] for u in basis]
    rhs = [dot(make_point(u), make_point(point)) for u in basis]
    coords = solve_square(gram, rhs)
    if coords is None:
        raise GeometryError("Базис линейно зависим.")
    return coords


def frame_volume(P: Polytope, basis: Sequence[Sequence]) -> Fraction:
    """Объём P в координатах решёточного базиса подпространства, содержащего P

    Евклидов объём равен этой величине, умноженной на sqrt(det Gram(basis)).
    """
    k = len(basis)
    if P.is_empty:
        return Fraction(0)
    if k == 0:
        return Fraction(1)
    coords = [frame_coordinates(v, basis) for v in P.vertices]
    return volume(canonical_hull(coords))
