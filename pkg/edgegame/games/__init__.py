from .stage_cost_matrix import StageCostMatrix, MixedPolicy2
from .stage_game import (
    StageGame, stage_solve, pure_saddle, final_stage_policies,
    parameterized_recursion, DECISION_MATRIX
)
from .edge_game import (
    EdgeGameSolution, solve_edge_game, edge_game_value, forward_payoff
)
from .rollouts import RolloutOutcome, play_rollout, simulate_rollouts
from .continuum import (
    analytic_value, approx_value, approximation_error, implicit_residual
)
from .profiles import horizon_profile, error_profile


# Stage cost of the worked examples and the default of every experiment.
DEFAULT_STAGE_COST = StageCostMatrix(30., 30., 70., 10.)
