"""
JSON-схемы многогранников.

    { "dim": n, "vertices": [["p/q", ...], ...], "facets": [...] }

Грани на входе необязательны и пересчитываются, на выходе всегда есть.
"""

from pydantic import BaseModel, Field

from abx.exactgeom.polytope import Polytope, canonical_hull
from abx.exactgeom.rational import format_rational, point_from_strings, point_to_strings
from abx.exception import GeometryError

__all__ = ("FacetSchema", "PolytopeSchema", "polytope_to_json", "polytope_from_json")


class FacetSchema(BaseModel):
    normal: list[str]
    offset: str


class PolytopeSchema(BaseModel):
    dim: int = Field(ge=0)
    vertices: list[list[str]]
    facets: list[FacetSchema] | None = None
    equations: list[FacetSchema] | None = None


def polytope_to_json(P: Polytope) -> dict:
    return PolytopeSchema(
        dim=P.dim,
        vertices=[point_to_strings(v) for v in P.vertices],
        facets=[
            FacetSchema(normal=point_to_strings(f.normal), offset=format_rational(f.offset))
            for f in P.facets
        ],
        equations=[
            FacetSchema(normal=point_to_strings(e.normal), offset=format_rational(e.offset))
            for e in P.equations
        ],
    ).model_dump()


def polytope_from_json(data: dict | PolytopeSchema) -> Polytope:
    schema = data if isinstance(data, PolytopeSchema) else PolytopeSchema.model_validate(data)
    points = [point_from_strings(v) for v in schema.vertices]
    if any(len(p) != schema.dim for p in points):
        raise GeometryError("Длина вершины не совпадает с dim.")
    if not points:
        return Polytope.empty(schema.dim)
    return canonical_hull(points)
