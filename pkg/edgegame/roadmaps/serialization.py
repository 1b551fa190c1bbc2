"""Reading and writing roadmaps as JSON files of the form

    {
        "directed": true,
        "vertices": [{"id": 0, "x": 0.1, "y": 0.7}, ...],
        "edges": [
            {"from": 0, "to": 2, "num_stages": 6,
             "s11": 30, "s12": 30, "s21": 70, "s22": 10},
            ...
        ]
    }

Unknown fields are rejected. Structural problems of a well-formed file, such
as self-loops or a non-positive number of stages, are reported by
`Roadmap.validate`.
"""
import json
from typing import List

import pydantic
from pydantic import BaseModel, ConfigDict, Field, StrictBool, StrictInt

from .roadmap import Edge, Roadmap, Vertex
from ..exceptions import ParseError
from ..games import StageCostMatrix


class VertexSchema(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: StrictInt
    x: float
    y: float


class EdgeSchema(BaseModel):
    model_config = ConfigDict(extra="forbid")

    source: StrictInt = Field(alias="from")
    target: StrictInt = Field(alias="to")
    num_stages: StrictInt
    s11: float
    s12: float
    s21: float
    s22: float


class RoadmapSchema(BaseModel):
    model_config = ConfigDict(extra="forbid")

    directed: StrictBool
    vertices: List[VertexSchema]
    edges: List[EdgeSchema]


def roadmap_from_dict(data):
    """Builds and validates a roadmap from its JSON object.

    Raises:
        ParseError: If the object does not match the schema; the location is
            the dotted path of the offending field, e.g. "edges.2.num_stages".
        InvariantViolationError: If the roadmap breaks a structural invariant.
    """
    try:
        schema = RoadmapSchema.model_validate(data)
    except pydantic.ValidationError as err:
        first = err.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or None
        raise ParseError(first["msg"], location=location) from err
    vertices = [Vertex(v.id, v.x, v.y) for v in schema.vertices]
    edges = [
        Edge(
            e.source, e.target, e.num_stages,
            StageCostMatrix(e.s11, e.s12, e.s21, e.s22)
        )
        for e in schema.edges
    ]
    return Roadmap.create(vertices, edges, directed=schema.directed)


def roadmap_to_dict(roadmap):
    return {
        "directed": roadmap.directed,
        "vertices": [
            {"id": v.id, "x": v.x, "y": v.y} for v in roadmap.vertices
        ],
        "edges": [
            {
                "from": e.source, "to": e.target,
                "num_stages": int(e.num_stages),
                "s11": e.stage_cost.s11, "s12": e.stage_cost.s12,
                "s21": e.stage_cost.s21, "s22": e.stage_cost.s22,
            }
            for e in roadmap.edges
        ],
    }


def load_roadmap(path):
    """Loads a roadmap from a JSON file.

    Parameters:
        path (str or path-like): The file to read.

    Returns:
        Roadmap: The validated roadmap.
    """
    with open(path) as f:
        text = f.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(
            err.msg, location="line {}, column {}".format(err.lineno, err.colno)
        ) from err
    if not isinstance(data, dict):
        raise ParseError("A roadmap file must hold a JSON object", "line 1")
    return roadmap_from_dict(data)


def save_roadmap(roadmap, path):
    with open(path, "w") as f:
        json.dump(roadmap_to_dict(roadmap), f, indent=2)
        f.write("\n")
