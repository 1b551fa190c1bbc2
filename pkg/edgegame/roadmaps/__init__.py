from .roadmap import Vertex, Edge, Roadmap
from .abstract_graph_generator import (
    AbstractGraphGenerator, DEFAULT_STAGE_SCALE
)
from .sparse_graph_generator import (
    SparseGraphGenerator, generate_sparse_graph, DEFAULT_DEGREE_RANGE
)
from .complete_dag_generator import (
    CompleteDAGGenerator, generate_complete_dag, DENSE_STAGE_SCALE
)
from .simple_network import simple_network
from .serialization import (
    load_roadmap, save_roadmap, roadmap_from_dict, roadmap_to_dict
)
