import logging
import math

import networkx as nx
import numpy as np

from .abstract_graph_generator import (
    AbstractGraphGenerator, DEFAULT_STAGE_SCALE
)
from ..exceptions import InfeasibleDegreeError
from ..utilities import derive_seed


logger = logging.getLogger(__name__)

DEFAULT_DEGREE_RANGE = (2, 3)


class SparseGraphGenerator(AbstractGraphGenerator):
    """Sparse Graph Generator Class

    Generates sparse roadmaps by connecting random pairs of vertices until the
    degree of every vertex, counted over incident edges regardless of
    direction, lies in the target range. Edges are then oriented from the
    lower to the higher vertex id, which keeps the roadmap acyclic so that its
    simple paths can be enumerated. A sample in which the last vertex cannot
    be reached from vertex 0 is discarded and drawn again with a derived seed.
    """
    def __init__(
            self, degree_range=DEFAULT_DEGREE_RANGE,
            stage_scale=DEFAULT_STAGE_SCALE,
            stage_cost=None, max_attempts=100
    ):
        """Initialize the parameters of the sparse graph generator object.

        Parameters:
            degree_range (tuple, optional): Lower and upper limits of the
                vertex degrees.
            stage_scale (float, optional): See `AbstractGraphGenerator`.
            stage_cost (StageCostMatrix, optional): See
                `AbstractGraphGenerator`.
            max_attempts (int, optional): Number of samples drawn before the
                degree range is declared infeasible.
        """
        super().__init__(stage_scale, stage_cost)
        low, high = degree_range
        if not 0 < low <= high:
            raise ValueError(
                "Invalid degree range [{}, {}]".format(low, high)
            )
        self.degree_range = (low, high)
        self.max_attempts = max_attempts

    def integer_degree_bounds(self, n_vertices):
        low, high = self.degree_range
        return math.ceil(low), min(math.floor(high), n_vertices - 1)

    def sample_pairs(self, rng, n_vertices, lower, upper):
        """Adds random edges to every vertex whose degree is below `lower`,
        choosing partners whose degree is still below `upper`. Returns None
        when a vertex runs out of admissible partners.
        """
        degree = np.zeros(n_vertices, dtype=int)
        adjacent = [set() for _ in range(n_vertices)]
        for v in rng.permutation(n_vertices):
            while degree[v] < lower:
                partners = [
                    u for u in range(n_vertices)
                    if u != v and u not in adjacent[v] and degree[u] < upper
                ]
                if not partners:
                    return None
                u = partners[rng.integers(len(partners))]
                adjacent[v].add(u)
                adjacent[u].add(v)
                degree[u] += 1
                degree[v] += 1
        return {
            (min(u, v), max(u, v))
            for v in range(n_vertices) for u in adjacent[v]
        }

    def generate(self, n_vertices, seed):
        """Implementation of abstract base class method."""
        return self.generate_counted(n_vertices, seed)[0]

    def generate_counted(self, n_vertices, seed):
        n_vertices = self.check_num_vertices(n_vertices)
        if n_vertices == 2:
            rng = np.random.default_rng(derive_seed(seed, 0))
            return (
                self.make_roadmap(self.sample_vertices(rng, 2), [(0, 1)]), 0
            )
        lower, upper = self.integer_degree_bounds(n_vertices)
        if lower > upper:
            raise InfeasibleDegreeError(
                "No integer degree in {} is achievable with {} vertices".format(
                    self.degree_range, n_vertices
                )
            )
        for attempt in range(self.max_attempts):
            rng = np.random.default_rng(derive_seed(seed, attempt))
            vertices = self.sample_vertices(rng, n_vertices)
            pairs = self.sample_pairs(rng, n_vertices, lower, upper)
            if pairs is None:
                logger.debug("Attempt %d: degree targets unreachable", attempt)
                continue
            G = nx.DiGraph(sorted(pairs))
            G.add_nodes_from(range(n_vertices))
            if not nx.has_path(G, 0, n_vertices - 1):
                logger.debug(
                    "Attempt %d: vertex %d unreachable from 0",
                    attempt, n_vertices - 1
                )
                continue
            logger.debug(
                "Sparse roadmap with %d vertices and %d edges after %d "
                "attempts", n_vertices, len(pairs), attempt + 1
            )
            return self.make_roadmap(vertices, pairs), attempt
        logger.warning(
            "Sparse generation failed %d times for n = %d",
            self.max_attempts, n_vertices
        )
        raise InfeasibleDegreeError(
            "Could not generate a connected roadmap with {} vertices and "
            "degrees in {} within {} attempts".format(
                n_vertices, self.degree_range, self.max_attempts
            )
        )


def generate_sparse_graph(
        n_vertices, degree_range=DEFAULT_DEGREE_RANGE,
        stage_scale=DEFAULT_STAGE_SCALE,
        stage_cost=None, seed=0
):
    """Generates a sparse random roadmap. See `SparseGraphGenerator`."""
    return SparseGraphGenerator(
        degree_range, stage_scale, stage_cost
    ).generate(n_vertices, seed)
