from .roadmap import Edge, Roadmap, Vertex
from ..games import DEFAULT_STAGE_COST


def simple_network(direct_stages=6, alt_stages=3, stage_cost=None):
    """The three-vertex roadmap in which the source 0 reaches the target 2
    either over the direct edge 0->2 or over the two-edge alternative
    0->1->2, whose legs have the same number of stages.

    Edges are listed as [0->2, 0->1, 1->2], so edge 0 is the direct edge.

    Parameters:
        direct_stages (int, optional): Stages of the direct edge.
        alt_stages (int, optional): Stages of each leg of the alternative.
        stage_cost (StageCostMatrix, optional): Stage cost on every edge.
            Defaults to `DEFAULT_STAGE_COST`.

    Returns:
        Roadmap: The validated roadmap.
    """
    S = DEFAULT_STAGE_COST if stage_cost is None else stage_cost
    vertices = [Vertex(0, 0., 0.), Vertex(1, .5, .5), Vertex(2, 1., 0.)]
    edges = [
        Edge(0, 2, direct_stages, S),
        Edge(0, 1, alt_stages, S),
        Edge(1, 2, alt_stages, S),
    ]
    return Roadmap.create(vertices, edges, directed=True)
