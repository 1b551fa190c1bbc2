from .paths import PathSet, enumerate_paths, DEFAULT_MAX_PATHS
from .meta_game import (
    MetaGame, edge_weight_attacked, edge_weight_clean, build_meta_matrix,
    solve_matrix_game, solve_meta_game, meta_game_rows, write_meta_game_csv,
    meta_game_to_dict
)
from .heuristic import (
    HeuristicResult, lexicographic_dijkstra, path_cost_under_attack,
    shortest_path_edge_attack
)
from .sensitivity import (
    SensitivityGrid, sensitivity_sweep_costs, sensitivity_sweep_stages
)
