from abc import abstractmethod

import numpy as np

from .roadmap import Edge, Roadmap, Vertex
from ..games import DEFAULT_STAGE_COST


# Number of stages per unit of euclidean distance.
DEFAULT_STAGE_SCALE = 10.


class AbstractGraphGenerator:
    """Abstract Graph Generator Class

    This class implements the template functionalities of a random roadmap
    generator. Vertices are sampled uniformly from the unit square, every edge
    is charged by one constant stage cost matrix, and the number of stages of
    an edge is proportional to its euclidean length. Concrete generators decide
    which pairs of vertices are connected by implementing `generate`.
    """
    def __init__(self, stage_scale=DEFAULT_STAGE_SCALE, stage_cost=None):
        """Initialize the parameters of the abstract graph generator object.

        Parameters:
            stage_scale (float, optional): Number of stages per unit of
                distance. Must be positive.
            stage_cost (StageCostMatrix, optional): The stage cost applied on
                every edge. Defaults to `DEFAULT_STAGE_COST`.
        """
        if not stage_scale > 0.:
            raise ValueError("The stage scale must be positive.")
        self.stage_scale = float(stage_scale)
        self.stage_cost = (
            DEFAULT_STAGE_COST if stage_cost is None else stage_cost
        )

    @staticmethod
    def check_num_vertices(n_vertices):
        if int(n_vertices) != n_vertices or n_vertices < 2:
            raise ValueError(
                "A roadmap needs at least two vertices; got {}".format(
                    n_vertices
                )
            )
        return int(n_vertices)

    def num_stages(self, distance):
        """The number of stages of an edge of the given length, never less
        than one.
        """
        return max(1, int(np.rint(self.stage_scale * distance)))

    def sample_vertices(self, rng, n_vertices):
        positions = rng.uniform(0., 1., size=(n_vertices, 2))
        return [Vertex(i, x, y) for i, (x, y) in enumerate(positions)]

    def make_edge(self, vertices, source, target):
        a, b = vertices[source], vertices[target]
        distance = np.hypot(a.x - b.x, a.y - b.y)
        return Edge(source, target, self.num_stages(distance), self.stage_cost)

    def make_roadmap(self, vertices, pairs):
        """Builds the directed roadmap with one edge per (source, target) pair,
        listed in ascending pair order.
        """
        edges = [self.make_edge(vertices, u, v) for u, v in sorted(pairs)]
        return Roadmap.create(vertices, edges, directed=True)

    def generate_counted(self, n_vertices, seed):
        """Generates a roadmap and reports how many samples were discarded
        before it was accepted. Generators that never discard return zero.

        Returns:
            Tuple: The roadmap and the number of discarded samples.
        """
        return self.generate(n_vertices, seed), 0

    @abstractmethod
    def generate(self, n_vertices, seed):
        """Generates a random roadmap.

        Parameters:
            n_vertices (int): The number of vertices, at least two.
            seed (int): Seed of the generator. Equal seeds produce identical
                roadmaps.

        Returns:
            Roadmap: The generated roadmap, in which vertex `n_vertices - 1`
                is reachable from vertex 0.
        """
        raise NotImplementedError()
