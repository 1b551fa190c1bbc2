import itertools

import numpy as np

from .abstract_graph_generator import AbstractGraphGenerator
from ..utilities import derive_seed


# Stages per unit of distance on complete roadmaps.
DENSE_STAGE_SCALE = 200.


class CompleteDAGGenerator(AbstractGraphGenerator):
    """Complete DAG Generator Class

    Generates densely connected directed acyclic roadmaps with an edge from
    every vertex to every vertex of higher id. A roadmap with N vertices has
    N (N - 1) / 2 edges and 2^(N - 2) paths from vertex 0 to vertex N - 1.
    """
    def __init__(self, stage_scale=DENSE_STAGE_SCALE, stage_cost=None):
        super().__init__(stage_scale, stage_cost)

    def generate(self, n_vertices, seed):
        """Implementation of abstract base class method."""
        n_vertices = self.check_num_vertices(n_vertices)
        rng = np.random.default_rng(derive_seed(seed, 0))
        vertices = self.sample_vertices(rng, n_vertices)
        return self.make_roadmap(
            vertices, itertools.combinations(range(n_vertices), 2)
        )


def generate_complete_dag(
        n_vertices, stage_scale=DENSE_STAGE_SCALE, stage_cost=None, seed=0
):
    """Generates a complete directed acyclic roadmap. See
    `CompleteDAGGenerator`.
    """
    return CompleteDAGGenerator(stage_scale, stage_cost).generate(
        n_vertices, seed
    )
