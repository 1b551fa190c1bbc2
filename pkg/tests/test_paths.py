import pytest

from edgegame.exceptions import NoPathError, PathExplosionError
from edgegame.metagame import enumerate_paths
from edgegame.roadmaps import Edge, Roadmap, Vertex, generate_complete_dag


S = (30., 30., 70., 10.)


def line(n):
    vertices = [Vertex(i, i / n, 0.) for i in range(n)]
    edges = [Edge(i, i + 1, 2, S) for i in range(n - 1)]
    return Roadmap.create(vertices, edges)


def test_network_paths(network):
    path_set = enumerate_paths(network, 0, 2)
    # Neighbors are visited in ascending id, so the detour comes first.
    assert path_set.vertex_paths == ((0, 1, 2), (0, 2))
    assert path_set.paths == ((1, 2), (0,))
    assert path_set.attackable_edges == (0, 1, 2)
    assert path_set.index((0,)) == 1


def test_single_edge():
    path_set = enumerate_paths(line(2), 0, 1)
    assert path_set.paths == ((0,),)
    assert path_set.attackable_edges == (0,)


def test_complete_dag_paths():
    path_set = enumerate_paths(generate_complete_dag(5, seed=0), 0, 4)
    assert len(path_set) == 8
    for vertex_path in path_set.vertex_paths:
        assert vertex_path[0] == 0 and vertex_path[-1] == 4
        assert len(set(vertex_path)) == len(vertex_path)
    assert list(path_set.vertex_paths) == sorted(path_set.vertex_paths)


def test_attackable_edges_are_the_union_of_path_edges():
    # Edge 3 leaves the target and is on no path.
    vertices = [Vertex(i, 0., 0.) for i in range(4)]
    edges = [Edge(0, 1, 1, S), Edge(1, 2, 1, S), Edge(0, 2, 1, S),
             Edge(2, 3, 1, S)]
    path_set = enumerate_paths(Roadmap.create(vertices, edges), 0, 2)
    assert path_set.attackable_edges == (0, 1, 2)


def test_no_path():
    with pytest.raises(NoPathError):
        enumerate_paths(line(3), 2, 0)


def test_path_explosion():
    with pytest.raises(PathExplosionError) as info:
        enumerate_paths(generate_complete_dag(8, seed=0), 0, 7, max_paths=10)
    assert info.value.cap == 10
    assert info.value.count > 10


def test_undirected_paths():
    vertices = [Vertex(i, 0., 0.) for i in range(3)]
    edges = [Edge(0, 1, 1, S), Edge(2, 1, 1, S)]
    path_set = enumerate_paths(
        Roadmap.create(vertices, edges, directed=False), 0, 2
    )
    assert path_set.vertex_paths == ((0, 1, 2),)
    assert path_set.paths == ((0, 1),)


@pytest.mark.parametrize("source, target", [(0, 0), (0, 9), (-1, 1)])
def test_invalid_endpoints(source, target):
    with pytest.raises(ValueError):
        enumerate_paths(line(3), source, target)
