import collections

import networkx as nx
import numpy as np

from ..exceptions import InvariantViolationError
from ..games import StageCostMatrix


class Vertex(collections.namedtuple("Vertex", ["id", "x", "y"])):
    """A roadmap vertex with its position in the unit square."""
    __slots__ = ()

    def __new__(cls, id, x, y):
        return super().__new__(cls, int(id), float(x), float(y))


class Edge(
    collections.namedtuple(
        "Edge", ["source", "target", "num_stages", "stage_cost"]
    )
):
    """A roadmap edge traversed in `num_stages` stages, each charged by the
    same stage cost matrix.
    """
    __slots__ = ()

    def __new__(cls, source, target, num_stages, stage_cost):
        if not isinstance(stage_cost, StageCostMatrix):
            stage_cost = StageCostMatrix(*stage_cost)
        return super().__new__(
            cls, int(source), int(target), num_stages, stage_cost
        )

    @property
    def label(self):
        return "{}->{}".format(self.source, self.target)


class Roadmap(
    collections.namedtuple("Roadmap", ["vertices", "edges", "directed"])
):
    """Roadmap Class

    The environment of the routing problem: vertices with planar positions and
    edges carrying their number of stages and stage cost. Edges are referred to
    everywhere else by their index in `edges`. An undirected roadmap may be
    traversed along each edge in both directions, but the edge keeps a single
    index.

    Use `Roadmap.create` to obtain a validated instance.
    """
    __slots__ = ()

    @classmethod
    def create(cls, vertices, edges, directed=True):
        """Builds a roadmap from vertex and edge sequences and validates it."""
        roadmap = cls(tuple(vertices), tuple(edges), bool(directed))
        roadmap.validate()
        return roadmap

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_edges(self):
        return len(self.edges)

    def validate(self):
        """Checks the structural invariants of the roadmap and raises an
        `InvariantViolationError` naming the first violation found.
        """
        ids = [v.id for v in self.vertices]
        if sorted(ids) != list(range(len(ids))):
            raise InvariantViolationError(
                "Vertex ids must be unique and contiguous from 0; got {}".format(
                    ids
                )
            )
        if ids != sorted(ids):
            raise InvariantViolationError("Vertices must be listed by id.")
        seen = set()
        for index, e in enumerate(self.edges):
            if not (0 <= e.source < len(ids) and 0 <= e.target < len(ids)):
                raise InvariantViolationError(
                    "Edge {} ({}) references an unknown vertex".format(
                        index, e.label
                    )
                )
            if e.source == e.target:
                raise InvariantViolationError(
                    "Edge {} is a self-loop at vertex {}".format(index, e.source)
                )
            if (
                isinstance(e.num_stages, (bool, np.bool_)) or
                int(e.num_stages) != e.num_stages or e.num_stages < 1
            ):
                raise InvariantViolationError(
                    "Edge {} ({}) has {} stages; at least one is needed".format(
                        index, e.label, e.num_stages
                    )
                )
            if any(s < 0. for s in e.stage_cost):
                raise InvariantViolationError(
                    "Edge {} ({}) has a negative stage cost".format(
                        index, e.label
                    )
                )
            key = (
                (e.source, e.target) if self.directed
                else frozenset((e.source, e.target))
            )
            if key in seen:
                raise InvariantViolationError(
                    "Duplicate edge {} at index {}".format(e.label, index)
                )
            seen.add(key)

    def to_networkx(self):
        """Returns the roadmap as a `networkx.DiGraph` whose arcs carry the
        attribute `index` of the underlying edge. Arcs are inserted in
        ascending (source, target) order so that neighbor iteration is
        ascending in vertex id.
        """
        G = nx.DiGraph()
        for v in self.vertices:
            G.add_node(v.id, pos=(v.x, v.y))
        arcs = []
        for index, e in enumerate(self.edges):
            arcs.append((e.source, e.target, index))
            if not self.directed:
                arcs.append((e.target, e.source, index))
        for u, v, index in sorted(arcs):
            G.add_edge(u, v, index=index)
        return G

    def with_stage_cost(self, stage_cost):
        """Returns a copy of the roadmap with every edge charged by
        `stage_cost`.
        """
        return self._replace(edges=tuple(
            e._replace(stage_cost=stage_cost) for e in self.edges
        ))

    def edge_labels(self, indices=None):
        if indices is None:
            indices = range(self.num_edges)
        return [self.edges[i].label for i in indices]
