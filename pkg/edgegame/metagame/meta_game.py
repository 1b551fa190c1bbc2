import collections
import csv
import logging

import numpy as np

from .paths import DEFAULT_MAX_PATHS, enumerate_paths
from ..games import edge_game_value
from ..solvers import SimplexSolver


logger = logging.getLogger(__name__)


def edge_weight_attacked(edge):
    """Cost of traversing an attacked edge: the value of its edge-game."""
    return edge_game_value(edge.stage_cost, int(edge.num_stages))


def edge_weight_clean(edge):
    """Cost of traversing an edge that is not attacked: the mobility cost
    s22 paid at each of its stages.
    """
    return edge.num_stages * edge.stage_cost.s22


class MetaGame(
    collections.namedtuple("MetaGame", [
        "matrix", "value", "defender_mix", "attacker_mix", "path_set",
        "edge_labels"
    ])
):
    """Meta Game Class

    The solved zero-sum game in which the defender picks a path and the
    attacker picks a single edge to attack. `matrix[i, j]` is the cost of
    path `i` when edge `path_set.attackable_edges[j]` is attacked, `value` is
    the equilibrium cost and the mixes are the equilibrium strategies over the
    rows and columns.
    """
    __slots__ = ()

    def path_probabilities(self):
        """Defender probability of every path, keyed by its vertex sequence."""
        return collections.OrderedDict(
            zip(self.path_set.vertex_paths, self.defender_mix.tolist())
        )

    def edge_probabilities(self):
        """Attacker probability of every attackable edge, keyed by its
        "from->to" label.
        """
        return collections.OrderedDict(
            zip(self.edge_labels, self.attacker_mix.tolist())
        )

    def path_probability(self, path):
        return float(self.defender_mix[self.path_set.index(path)])

    def edge_probability(self, edge_index):
        column = self.path_set.attackable_edges.index(edge_index)
        return float(self.attacker_mix[column])


def build_meta_matrix(roadmap, path_set):
    """Builds the cost matrix of the meta-game.

    A path pays the clean weight of every edge it uses, except that the
    attacked edge, if it is on the path, costs its edge-game value instead.

    Parameters:
        roadmap (Roadmap): The roadmap.
        path_set (PathSet): The paths of the defender; its attackable edges
            are the actions of the attacker.

    Returns:
        Numpy array: The matrix with one row per path and one column per
            attackable edge.
    """
    clean = np.array([edge_weight_clean(e) for e in roadmap.edges], dtype=float)
    columns = list(path_set.attackable_edges)
    attacked = np.array(
        [edge_weight_attacked(roadmap.edges[j]) for j in columns], dtype=float
    )
    incidence = np.zeros((len(path_set), roadmap.num_edges), dtype=bool)
    for i, path in enumerate(path_set.paths):
        incidence[i, list(path)] = True
    row_clean = incidence.dot(clean)
    surcharge = attacked - clean[columns]
    return row_clean[:, np.newaxis] + np.where(
        incidence[:, columns], surcharge[np.newaxis, :], 0.
    )


def solve_matrix_game(W, solver=None):
    """Solves a zero-sum matrix game in which the row player minimizes.

    Parameters:
        W (array-like): The payoff matrix.
        solver (AbstractMatrixGameSolver, optional): Defaults to a
            `SimplexSolver`.

    Returns:
        Tuple: The value, the row player's mix and the column player's mix.
    """
    solver = SimplexSolver() if solver is None else solver
    return solver.solve(W)


def solve_meta_game(
        roadmap, source, target, path_set=None, max_paths=DEFAULT_MAX_PATHS,
        solver=None
):
    """Enumerates the paths from `source` to `target`, builds the meta-game
    and solves it.

    Parameters:
        roadmap (Roadmap): The roadmap.
        source (int): The start vertex.
        target (int): The goal vertex.
        path_set (PathSet, optional): Previously enumerated paths of the
            roadmap between the same vertices.
        max_paths (int, optional): Cap on the number of paths.
        solver (AbstractMatrixGameSolver, optional): See `solve_matrix_game`.

    Returns:
        MetaGame: The solved meta-game.
    """
    if path_set is None:
        path_set = enumerate_paths(roadmap, source, target, max_paths)
    W = build_meta_matrix(roadmap, path_set)
    value, defender_mix, attacker_mix = solve_matrix_game(W, solver)
    logger.debug(
        "Meta-game %dx%d from %d to %d has value %.6f",
        W.shape[0], W.shape[1], source, target, value
    )
    return MetaGame(
        W, value, defender_mix, attacker_mix, path_set,
        tuple(roadmap.edge_labels(path_set.attackable_edges))
    )


def _path_label(vertex_path):
    return "->".join(str(v) for v in vertex_path)


def meta_game_rows(meta):
    """The meta-game as CSV rows: a header of edge labels, one row of costs
    per path and the trailing value and mix rows.
    """
    rows = [["path"] + list(meta.edge_labels)]
    for vertex_path, costs in zip(meta.path_set.vertex_paths, meta.matrix):
        rows.append(
            [_path_label(vertex_path)] + ["{:.6f}".format(w) for w in costs]
        )
    rows.append(["value", "{:.6f}".format(meta.value)])
    rows.append(
        ["defender_mix"] + ["{:.6f}".format(p) for p in meta.defender_mix]
    )
    rows.append(
        ["attacker_mix"] + ["{:.6f}".format(p) for p in meta.attacker_mix]
    )
    return rows


def write_meta_game_csv(meta, target):
    """Writes the meta-game to a path or an open text stream."""
    if hasattr(target, "write"):
        csv.writer(target, lineterminator="\n").writerows(meta_game_rows(meta))
        return
    with open(target, "w", newline="") as f:
        csv.writer(f, lineterminator="\n").writerows(meta_game_rows(meta))


def meta_game_to_dict(meta):
    return {
        "paths": [list(p) for p in meta.path_set.vertex_paths],
        "edges": list(meta.edge_labels),
        "matrix": meta.matrix.tolist(),
        "value": meta.value,
        "defender_mix": meta.defender_mix.tolist(),
        "attacker_mix": meta.attacker_mix.tolist(),
    }
