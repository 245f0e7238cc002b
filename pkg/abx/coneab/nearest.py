"""
Метрические проекции на конус и на многогранник.

Точка r = π_C(p) тогда и только тогда, когда r ∈ C, r − p ∈ C∨
и ⟨r − p, r⟩ = 0. Проекция ищется перебором граней: p проецируется
на линейную оболочку грани и проверяется этот сертификат.
"""

from fractions import Fraction
from typing import Iterable, Sequence

from abx.coneab.body import CABBody
from abx.coneab.cone import PolyhedralCone
from abx.exactgeom import (
    Point,
    Polytope,
    add,
    contains_point,
    dot,
    independent_rows,
    make_point,
    orthogonal_projection,
    sub,
)
from abx.exception import ConeError, GeometryError
from abx.records import CheckReport, Relation, make_record, theorem

__all__ = (
    "nearest_point",
    "is_nearest_point",
    "nearest_point_polytope",
    "nearest_point_check",
    "polytope_projection_check",
    "dissection_of_space_check",
)


def is_nearest_point(C: PolyhedralCone, p: Sequence, r: Sequence) -> bool:
    """Сертификат: r ∈ C, r − p ∈ C∨, ⟨r − p, r⟩ = 0"""
    p, r = make_point(p), make_point(r)
    s = sub(r, p)
    return C.contains(r) and C.dual().contains(s) and dot(s, r) == 0


def nearest_point(C: PolyhedralCone, p: Sequence) -> Point:
    """π_C(p)

    Пример:

        nearest_point(PolyhedralCone.from_generators([(1, 0), (1, 1)]), (0, 2))
        >>> (1, 1)
    """
    p = make_point(p)
    if len(p) != C.dim:
        raise ConeError("Размерность точки не совпадает с размерностью конуса.")
    for face in C.faces:
        r = orthogonal_projection(p, face.basis)
        if is_nearest_point(C, p, r):
            return r
    raise ConeError(f"Не найдена проекция точки {p}.")


def _polytope_faces(P: Polytope) -> list[frozenset[int]]:
    """Грани как множества индексов вершин: замыкание граней коразмерности 1 по пересечению"""
    vertices = P.vertices
    facet_sets = []
    for f in P.facets:
        tight = frozenset(
            i for i, v in enumerate(vertices) if dot(f.normal, v) == f.offset
        )
        if tight:
            facet_sets.append(tight)
    faces = {frozenset(range(len(vertices)))}
    frontier = list(set(facet_sets))
    while frontier:
        face = frontier.pop()
        if face in faces:
            continue
        faces.add(face)
        for other in facet_sets:
            common = face & other
            if common and common not in faces:
                frontier.append(common)
    return sorted(faces, key=lambda f: (len(f), sorted(f)))


def nearest_point_polytope(P: Polytope, p: Sequence) -> Point:
    """π_P(p): проекция на аффинную оболочку грани с проверкой ⟨p − r, v − r⟩ ≤ 0"""
    p = make_point(p)
    if P.is_empty:
        raise GeometryError("Проекция на пустое множество.")
    if len(p) != P.dim:
        raise GeometryError("Размерность точки не совпадает с размерностью тела.")
    if contains_point(P, p):
        return p
    for face in _polytope_faces(P):
        members = [P.vertices[i] for i in sorted(face)]
        base = members[0]
        diffs = [sub(v, base) for v in members[1:]]
        basis = [diffs[i] for i in independent_rows(diffs)] if diffs else []
        r = add(base, orthogonal_projection(sub(p, base), basis))
        if not contains_point(P, r):
            continue
        direction = sub(p, r)
        if all(dot(direction, sub(v, r)) <= 0 for v in P.vertices):
            return r
    raise GeometryError(f"Не найдена проекция точки {p}.")


def _squared(v: Sequence[Fraction]) -> Fraction:
    return dot(v, v)


def nearest_point_check(
    C: PolyhedralCone, points: Iterable[Sequence], instance_id: str = ""
) -> CheckReport:
    """Для каждой точки найденная проекция проходит сертификат"""
    points = [make_point(p) for p in points]
    certified = sum(1 for p in points if is_nearest_point(C, p, nearest_point(C, p)))
    record = make_record(
        instance_id,
        theorem.NEAREST_POINT,
        certified,
        len(points),
        relation=Relation.EQ,
    )
    return CheckReport(instance_id=instance_id, records=[record])


def polytope_projection_check(
    K: CABBody, points: Iterable[Sequence], instance_id: str = ""
) -> CheckReport:
    """Для p ∈ K̂ проекции на K и на конус совпадают

    Точки вне K̂ = {x : ⟨w,x⟩ ≤ 1, w ∈ W} пропускаются.
    """
    inside = [
        p
        for p in (make_point(q) for q in points)
        if all(dot(w, p) <= 1 for w in K.w_rep)
    ]
    agreeing = 0
    distance_K = distance_C = Fraction(0)
    for p in inside:
        r_K = nearest_point_polytope(K.body, p)
        r_C = nearest_point(K.cone, p)
        agreeing += r_K == r_C
        distance_K += _squared(sub(p, r_K))
        distance_C += _squared(sub(p, r_C))
    record = make_record(
        instance_id,
        theorem.POLYTOPE_PROJECTION,
        agreeing,
        len(inside),
        relation=Relation.EQ,
    )
    report = CheckReport(instance_id=instance_id, records=[record])
    report.values.update(
        points=len(inside),
        squared_distance_body=distance_K,
        squared_distance_cone=distance_C,
    )
    return report


def _member_projection(C: PolyhedralCone, face, p: Point) -> Point | None:
    """Разложение p = r − s с r ∈ F, s ∈ F⋄, если оно есть"""
    r = orthogonal_projection(p, face.basis)
    if not C.contains(r):
        return None
    s = sub(r, p)
    dual = C.dual()
    if not dual.contains(s):
        return None
    if any(dot(s, C.generators[i]) != 0 for i in face.generators):
        return None
    return r


def dissection_of_space_check(
    C: PolyhedralCone, points: Iterable[Sequence], instance_id: str = ""
) -> CheckReport:
    """R^n = ∪_F (F − F⋄): каждая точка лежит в куске своей грани

    Для граней, в куски которых попадает точка, разложение p = r − s
    одно и то же; несколько граней бывает только на границе кусков.
    """
    points = [make_point(p) for p in points]
    good = boundary = 0
    for p in points:
        r = nearest_point(C, p)
        own = C.face_of(r)
        projections = [
            q
            for q in (_member_projection(C, face, p) for face in C.faces)
            if q is not None
        ]
        if _member_projection(C, own, p) == r and all(q == r for q in projections):
            good += 1
        boundary += len(projections) > 1
    record = make_record(
        instance_id, theorem.SPACE_DISSECTION, good, len(points), relation=Relation.EQ
    )
    report = CheckReport(instance_id=instance_id, records=[record])
    report.values.update(points=len(points), boundary_points=boundary)
    return report
