import collections
import heapq
import logging
import math

from .meta_game import edge_weight_attacked, edge_weight_clean
from ..exceptions import NoPathError


logger = logging.getLogger(__name__)

# Path lengths this close are ties, decided by the vertex sequence.
DISTANCE_RTOL = 1e-9
DISTANCE_ATOL = 1e-12


class HeuristicResult(
    collections.namedtuple("HeuristicResult", [
        "shortest_path", "vertex_path", "length_under_attack", "worst_edge"
    ])
):
    """Outcome of the shortest path edge attack heuristic: the shortest path
    under attacked edge weights (as edge indices and as vertices), its worst
    cost when a single edge on it is attacked and the edge attaining it.
    """
    __slots__ = ()


def lexicographic_dijkstra(G, source, target, weights):
    """Dijkstra's algorithm in which ties between equally long paths are
    broken in favor of the lexicographically smaller vertex sequence. Lengths
    within `DISTANCE_RTOL` (or `DISTANCE_ATOL` near zero) of each other count
    as equal, so the order in which weights are summed does not decide ties.

    Parameters:
        G (networkx.DiGraph): Graph whose arcs carry the edge index in the
            attribute `index`.
        source (int): The start vertex.
        target (int): The goal vertex.
        weights (sequence): Nonnegative weight of every edge index.

    Returns:
        Tuple: The length of the shortest path and its vertex sequence, or
            (inf, None) when the target is unreachable.
    """
    frontier = [(0., (source,))]
    settled = set()
    while frontier:
        dist, path = heapq.heappop(frontier)
        ties = []
        while frontier and math.isclose(
                frontier[0][0], dist, rel_tol=DISTANCE_RTOL,
                abs_tol=DISTANCE_ATOL
        ):
            ties.append(heapq.heappop(frontier))
        if ties:
            # Settle the smallest sequence first and return the rest.
            ties.append((dist, path))
            ties.sort(key=lambda entry: entry[1])
            dist, path = ties[0]
            for entry in ties[1:]:
                heapq.heappush(frontier, entry)
        u = path[-1]
        if u in settled:
            continue
        settled.add(u)
        if u == target:
            return dist, path
        for v, data in G.succ[u].items():
            if v not in settled:
                heapq.heappush(
                    frontier, (dist + weights[data["index"]], path + (v,))
                )
    return float("inf"), None


def path_cost_under_attack(roadmap, path):
    """Cost of the path for every choice of attacked edge on it.

    Returns:
        List: Pairs (edge index, cost) in path order.
    """
    clean = [edge_weight_clean(roadmap.edges[e]) for e in path]
    total = sum(clean)
    return [
        (e, total - c + edge_weight_attacked(roadmap.edges[e]))
        for e, c in zip(path, clean)
    ]


def shortest_path_edge_attack(roadmap, source, target):
    """Shortest path heuristic against a single edge attack. Every edge is
    weighted by its attacked cost, the shortest path under these weights is
    selected and the attacker is assumed to attack its worst edge.

    Parameters:
        roadmap (Roadmap): The roadmap.
        source (int): The start vertex.
        target (int): The goal vertex.

    Returns:
        HeuristicResult: The selected path and its cost under attack.
    """
    weights = [edge_weight_attacked(e) for e in roadmap.edges]
    G = roadmap.to_networkx()
    if source not in G or target not in G:
        raise ValueError("Unknown source {} or target {}".format(source, target))
    if source == target:
        raise ValueError("Source and target must differ.")
    _, vertex_path = lexicographic_dijkstra(G, source, target, weights)
    if vertex_path is None:
        raise NoPathError("No path from {} to {}".format(source, target))
    path = tuple(
        G[u][v]["index"] for u, v in zip(vertex_path[:-1], vertex_path[1:])
    )
    # Largest cost; the lowest edge index among ties.
    worst_edge, length = max(
        path_cost_under_attack(roadmap, path),
        key=lambda pair: (pair[1], -pair[0])
    )
    logger.debug(
        "Shortest path %s costs %.6f when edge %d is attacked",
        vertex_path, length, worst_edge
    )
    return HeuristicResult(path, vertex_path, float(length), worst_edge)
