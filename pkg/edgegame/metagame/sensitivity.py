import collections
import itertools
import logging

import numpy as np
import pandas as pd

from .heuristic import shortest_path_edge_attack
from .meta_game import solve_meta_game
from .paths import DEFAULT_MAX_PATHS, enumerate_paths
from ..games import StageCostMatrix
from ..roadmaps import simple_network


logger = logging.getLogger(__name__)


class SensitivityGrid(
    collections.namedtuple("SensitivityGrid", [
        "row_name", "row_values", "col_name", "col_values",
        "p_shortest_path", "p_shortest_edge"
    ])
):
    """Equilibrium probabilities over a two-parameter grid. Entry [i, j] of
    `p_shortest_path` is the defender's probability of the reference path and
    entry [i, j] of `p_shortest_edge` the attacker's probability of the
    reference edge, at parameters (row_values[i], col_values[j]).
    """
    __slots__ = ()

    def to_frame(self):
        """Long form table with one row per grid point."""
        rows = [
            {
                self.row_name: a, self.col_name: b,
                "p_shortest_path": self.p_shortest_path[i, j],
                "p_shortest_edge": self.p_shortest_edge[i, j],
            }
            for (i, a), (j, b) in itertools.product(
                enumerate(self.row_values), enumerate(self.col_values)
            )
        ]
        return pd.DataFrame(rows, columns=[
            self.row_name, self.col_name, "p_shortest_path", "p_shortest_edge"
        ])


def _check_grid(values, name):
    values = [float(v) for v in np.atleast_1d(values)]
    if not values:
        raise ValueError("The {} grid is empty.".format(name))
    return values


def sensitivity_sweep_costs(
        roadmap, source, target, r1_grid, r2_grid, s11=1.,
        max_paths=DEFAULT_MAX_PATHS
):
    """Sweeps the penalty and mobility ratios. At every grid point all edges
    are charged by the parameterized stage cost s11 [[1, 1], [r1, r2]], the
    shortest path heuristic selects the reference path and its worst edge,
    and the meta-game is solved.

    Parameters:
        roadmap (Roadmap): The roadmap; its own stage costs are replaced.
        source (int): The start vertex.
        target (int): The goal vertex.
        r1_grid (sequence): Penalty ratios, each at least one.
        r2_grid (sequence): Mobility ratios, each in [0, 1).
        s11 (float, optional): The cost of defense.
        max_paths (int, optional): Cap on the number of paths.

    Returns:
        SensitivityGrid: Probabilities indexed by (r1, r2).
    """
    r1_grid = _check_grid(r1_grid, "r1")
    r2_grid = _check_grid(r2_grid, "r2")
    path_set = enumerate_paths(roadmap, source, target, max_paths)
    p_path = np.zeros((len(r1_grid), len(r2_grid)))
    p_edge = np.zeros_like(p_path)
    for (i, r1), (j, r2) in itertools.product(
            enumerate(r1_grid), enumerate(r2_grid)
    ):
        graph = roadmap.with_stage_cost(StageCostMatrix.from_ratios(s11, r1, r2))
        heuristic = shortest_path_edge_attack(graph, source, target)
        meta = solve_meta_game(graph, source, target, path_set=path_set)
        p_path[i, j] = meta.path_probability(heuristic.shortest_path)
        p_edge[i, j] = meta.edge_probability(heuristic.worst_edge)
        logger.debug(
            "r1 = %g, r2 = %g: p(path) = %.4f, p(edge) = %.4f",
            r1, r2, p_path[i, j], p_edge[i, j]
        )
    return SensitivityGrid("r1", r1_grid, "r2", r2_grid, p_path, p_edge)


def sensitivity_sweep_stages(
        stage_cost, direct_grid, alt_grid, topology=simple_network,
        source=0, target=2, reference_path=(0,), reference_edge=0
):
    """Sweeps the number of stages of the direct edge and of the legs of the
    alternative route of a `simple_network`-like topology. The reference path
    and edge are fixed across the grid; by default both are the direct edge.

    Parameters:
        stage_cost (StageCostMatrix): The stage cost on every edge.
        direct_grid (sequence of int): Stages of the direct edge.
        alt_grid (sequence of int): Stages of each alternative leg.
        topology (callable, optional): Maps (direct_stages, alt_stages,
            stage_cost) to a roadmap.
        source (int, optional): The start vertex.
        target (int, optional): The goal vertex.
        reference_path (tuple, optional): Edge indices of the path whose
            defender probability is reported.
        reference_edge (int, optional): Index of the edge whose attacker
            probability is reported.

    Returns:
        SensitivityGrid: Probabilities indexed by (direct, alternative)
            stages.
    """
    direct_grid = [int(k) for k in direct_grid]
    alt_grid = [int(k) for k in alt_grid]
    if not direct_grid or not alt_grid:
        raise ValueError("The stage grids must not be empty.")
    p_path = np.zeros((len(direct_grid), len(alt_grid)))
    p_edge = np.zeros_like(p_path)
    for (i, direct), (j, alt) in itertools.product(
            enumerate(direct_grid), enumerate(alt_grid)
    ):
        meta = solve_meta_game(topology(direct, alt, stage_cost), source, target)
        p_path[i, j] = meta.path_probability(reference_path)
        p_edge[i, j] = meta.edge_probability(reference_edge)
    return SensitivityGrid(
        "direct_stages", direct_grid, "alt_stages", alt_grid, p_path, p_edge
    )
