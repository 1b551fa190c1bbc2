import collections
import itertools
import logging

import networkx as nx

from ..exceptions import NoPathError, PathExplosionError


logger = logging.getLogger(__name__)

# Largest number of source-to-target paths a meta-game may have.
DEFAULT_MAX_PATHS = 2 ** 16


class PathSet(
    collections.namedtuple("PathSet", [
        "source", "target", "paths", "vertex_paths", "attackable_edges"
    ])
):
    """The simple paths between a source and a target vertex. `paths[i]` is the
    i-th path as a tuple of edge indices and `vertex_paths[i]` the same path as
    a tuple of vertex ids. `attackable_edges` lists, in ascending order, the
    indices of all edges used by at least one path.
    """
    __slots__ = ()

    def __len__(self):
        return len(self.paths)

    def index(self, path):
        """Row of the given edge-index path in the meta-game."""
        return self.paths.index(tuple(path))


def enumerate_paths(roadmap, source, target, max_paths=DEFAULT_MAX_PATHS):
    """Enumerates all simple paths from `source` to `target` by depth-first
    search, visiting neighbors in ascending vertex id.

    Parameters:
        roadmap (Roadmap): The roadmap.
        source (int): The start vertex.
        target (int): The goal vertex, distinct from the start vertex.
        max_paths (int, optional): Cap on the number of paths.

    Returns:
        PathSet: The enumerated paths.
    """
    vertices = range(roadmap.num_vertices)
    if source not in vertices or target not in vertices:
        raise ValueError("Unknown source {} or target {}".format(source, target))
    if source == target:
        raise ValueError("Source and target must differ.")
    G = roadmap.to_networkx()
    vertex_paths = [
        tuple(p) for p in itertools.islice(
            nx.all_simple_paths(G, source, target), max_paths + 1
        )
    ]
    if len(vertex_paths) > max_paths:
        raise PathExplosionError(
            "More than {} paths from {} to {}".format(max_paths, source, target),
            count=len(vertex_paths), cap=max_paths
        )
    if not vertex_paths:
        raise NoPathError("No path from {} to {}".format(source, target))
    paths = tuple(
        tuple(G[u][v]["index"] for u, v in zip(p[:-1], p[1:]))
        for p in vertex_paths
    )
    attackable = tuple(sorted(set(itertools.chain.from_iterable(paths))))
    logger.debug(
        "%d paths from %d to %d over %d edges",
        len(paths), source, target, len(attackable)
    )
    return PathSet(source, target, paths, tuple(vertex_paths), attackable)
