import csv
import io

import numpy as np
import pytest

from edgegame.games import StageCostMatrix
from edgegame.metagame import (
    build_meta_matrix, edge_weight_attacked, edge_weight_clean,
    enumerate_paths, meta_game_to_dict, shortest_path_edge_attack,
    solve_meta_game, write_meta_game_csv
)
from edgegame.roadmaps import Edge, Roadmap, Vertex, generate_complete_dag


def test_edge_weights(stage_cost):
    six = Edge(0, 1, 6, stage_cost)
    three = Edge(0, 1, 3, stage_cost)
    assert edge_weight_clean(six) == 60.
    assert edge_weight_attacked(six) == pytest.approx(127.76, abs=0.01)
    assert edge_weight_clean(three) == 30.
    assert edge_weight_attacked(three) == pytest.approx(73.92, abs=0.01)


def test_network_matrix(network):
    path_set = enumerate_paths(network, 0, 2)
    W = build_meta_matrix(network, path_set)
    # Rows are [0->1->2, 0->2]; columns are edges [0->2, 0->1, 1->2].
    np.testing.assert_allclose(W[1], [127.76, 60., 60.], atol=0.01)
    np.testing.assert_allclose(W[0], [60., 103.92, 103.92], atol=0.01)


def test_network_equilibrium(network):
    meta = solve_meta_game(network, 0, 2)
    a = edge_weight_attacked(network.edges[0])
    b = edge_weight_attacked(network.edges[1]) + 30.
    p_direct = (b - 60.) / (a + b - 120.)
    assert meta.path_probability((0,)) == pytest.approx(p_direct, abs=1e-8)
    assert meta.path_probability((0,)) == pytest.approx(0.3933, abs=1e-3)
    assert meta.value == pytest.approx(p_direct * a + (1. - p_direct) * 60.)
    assert meta.edge_probability(0) == pytest.approx(p_direct, abs=1e-8)
    assert meta.edge_labels == ("0->2", "0->1", "1->2")
    heuristic = shortest_path_edge_attack(network, 0, 2)
    assert meta.value <= heuristic.length_under_attack


def test_probability_views(network):
    meta = solve_meta_game(network, 0, 2)
    paths = meta.path_probabilities()
    assert list(paths) == [(0, 1, 2), (0, 2)]
    assert sum(paths.values()) == pytest.approx(1.)
    edges = meta.edge_probabilities()
    assert list(edges) == ["0->2", "0->1", "1->2"]
    assert sum(edges.values()) == pytest.approx(1.)


def test_columns_off_the_path_hold_the_clean_cost():
    roadmap = generate_complete_dag(7, seed=5)
    path_set = enumerate_paths(roadmap, 0, 6)
    W = build_meta_matrix(roadmap, path_set)
    for i, path in enumerate(path_set.paths):
        clean = sum(edge_weight_clean(roadmap.edges[e]) for e in path)
        for j, e in enumerate(path_set.attackable_edges):
            if e not in path:
                assert W[i, j] == clean
            else:
                assert W[i, j] > clean


def test_single_path_game(stage_cost):
    roadmap = Roadmap.create(
        [Vertex(0, 0., 0.), Vertex(1, .5, 0.), Vertex(2, 1., 0.)],
        [Edge(0, 1, 2, stage_cost), Edge(1, 2, 4, stage_cost)]
    )
    meta = solve_meta_game(roadmap, 0, 2)
    assert meta.defender_mix.tolist() == [1.]
    # The attacker hits the edge with the larger surcharge.
    assert meta.value == pytest.approx(
        max(
            edge_weight_attacked(roadmap.edges[0]) + 40.,
            edge_weight_attacked(roadmap.edges[1]) + 20.
        )
    )


def test_symmetric_routes_are_mixed_evenly(stage_cost):
    vertices = [Vertex(i, 0., 0.) for i in range(4)]
    edges = [
        Edge(0, 1, 3, stage_cost), Edge(0, 2, 3, stage_cost),
        Edge(1, 3, 3, stage_cost), Edge(2, 3, 3, stage_cost),
    ]
    meta = solve_meta_game(Roadmap.create(vertices, edges), 0, 3)
    np.testing.assert_allclose(meta.defender_mix, [0.5, 0.5], atol=1e-9)


@pytest.mark.parametrize("seed", range(5))
def test_meta_game_never_worse_than_heuristic(seed):
    roadmap = generate_complete_dag(6, seed=seed)
    meta = solve_meta_game(roadmap, 0, 5)
    heuristic = shortest_path_edge_attack(roadmap, 0, 5)
    assert meta.value <= heuristic.length_under_attack + 1e-9
    # The heuristic's cost is the maximum over its row of the matrix.
    row = meta.matrix[meta.path_set.index(heuristic.shortest_path)]
    assert heuristic.length_under_attack == pytest.approx(row.max())


def test_csv_dump(network):
    meta = solve_meta_game(network, 0, 2)
    buffer = io.StringIO()
    write_meta_game_csv(meta, buffer)
    rows = list(csv.reader(io.StringIO(buffer.getvalue())))
    assert rows[0] == ["path", "0->2", "0->1", "1->2"]
    assert rows[1][0] == "0->1->2"
    assert rows[2][0] == "0->2"
    assert rows[2][1] == "{:.6f}".format(meta.matrix[1, 0])
    assert [r[0] for r in rows[3:]] == ["value", "defender_mix", "attacker_mix"]
    assert len(rows[4]) == 3 and len(rows[5]) == 4


def test_csv_dump_to_file(tmp_path, network):
    meta = solve_meta_game(network, 0, 2)
    path = tmp_path / "meta.csv"
    write_meta_game_csv(meta, path)
    assert path.read_text().startswith("path,0->2,0->1,1->2\n")


def test_json_dump(network):
    meta = solve_meta_game(network, 0, 2)
    data = meta_game_to_dict(meta)
    assert data["paths"] == [[0, 1, 2], [0, 2]]
    assert data["value"] == meta.value
    assert len(data["matrix"]) == 2


def test_parameterized_costs_scale_the_game(network):
    S = StageCostMatrix.from_ratios(1., 7. / 3., 1. / 3.)
    small = solve_meta_game(network.with_stage_cost(S), 0, 2)
    large = solve_meta_game(network, 0, 2)
    assert large.value == pytest.approx(30. * small.value)
    np.testing.assert_allclose(
        large.defender_mix, small.defender_mix, atol=1e-8
    )
