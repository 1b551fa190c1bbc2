import collections
import functools
import logging

import numpy as np

from .stage_cost_matrix import MixedPolicy2
from .stage_game import StageGame
from ..exceptions import (
    DegenerateDenominatorError, LengthMismatchError, PureSaddleError
)


logger = logging.getLogger(__name__)


class EdgeGameSolution(
    collections.namedtuple("EdgeGameSolution", [
        "num_stages", "values", "defender_policies", "attacker_policies",
        "detection_budget"
    ])
):
    """Edge Game Solution Class

    The backward-induction solution of an edge-game. `values[k]` is the value
    of the game still to be played after stage `k`, so that `values[0]` is the
    value of the whole edge-game and `values[num_stages]` is zero. The policy
    lists are indexed from stage one: `defender_policies[k - 1]` is the
    equilibrium policy played at stage `k`.
    """
    __slots__ = ()

    @property
    def value(self):
        return float(self.values[0])

    def policy_arrays(self):
        """Returns the defender and attacker policies as arrays with one row per
        stage and columns [active, passive].
        """
        Y = np.array([p.as_array() for p in self.defender_policies])
        Z = np.array([p.as_array() for p in self.attacker_policies])
        return Y, Z


def solve_edge_game(S, num_stages):
    """Solves an edge-game with constant stage cost and a single stopping
    detection by backward induction from the terminal value zero.

    Parameters:
        S (StageCostMatrix): The stage cost applied at every stage.
        num_stages (int): The number of stages of the edge. Must be positive.

    Returns:
        EdgeGameSolution: The values of the game after every stage and the
            per-stage equilibrium policies.
    """
    if int(num_stages) != num_stages or num_stages < 1:
        raise ValueError(
            "The number of stages must be a positive integer; got {}".format(
                num_stages
            )
        )
    num_stages = int(num_stages)
    values = np.zeros(num_stages + 1)
    defender = [None] * num_stages
    attacker = [None] * num_stages
    # Backward from the terminal value zero; values[k] is the value of the
    # game once stages 1 to k are over.
    for k in range(num_stages, 0, -1):
        try:
            values[k - 1], defender[k - 1], attacker[k - 1] = StageGame(
                S, values[k]
            ).solve()
        except (DegenerateDenominatorError, PureSaddleError) as err:
            # Report the stage in the caller's numbering.
            err.stage = k
            raise
    logger.debug(
        "Edge-game with %d stages and S = %s has value %.6f",
        num_stages, S.to_string(), values[0]
    )
    return EdgeGameSolution(
        num_stages, values, tuple(defender), tuple(attacker), 1
    )


@functools.lru_cache(maxsize=4096)
def edge_game_value(S, num_stages):
    """Cached value of an edge-game; the weight of an attacked edge."""
    return solve_edge_game(S, num_stages).value


def forward_payoff(S, Y, Z):
    """Evaluates the expected attacker payoff of an edge-game under arbitrary
    behavioral policies with the forward recursion

        J_a = sum_{k=1}^{a} y_k' S z_k - sum_{b=1}^{a-1} y_{b,1} z_{b,1} J_{a-b}.

    Here `J_j` is the payoff of the j-stage game made of the last `j` stages
    of the policy sequences, so the recursion runs forward in `a` and each
    subtracted term removes the payoff that is lost once the game stops at
    stage `b`.

    Parameters:
        S (StageCostMatrix): The stage cost matrix.
        Y (sequence): Defender policies, one per stage, each a `MixedPolicy2`
            or a probability pair [p_defend, p_no_defend].
        Z (sequence): Attacker policies in the same format.

    Returns:
        Float: The expected payoff to the attacker over the full edge-game.
    """
    if len(Y) != len(Z):
        raise LengthMismatchError(
            "Defender and attacker policies cover {} and {} stages".format(
                len(Y), len(Z)
            )
        )
    Y = np.array([MixedPolicy2(*y).as_array() for y in Y])
    Z = np.array([MixedPolicy2(*z).as_array() for z in Z])
    n = len(Y)
    if n == 0:
        return 0.
    # Expected stage cost and detection probability of every stage.
    stage_costs = np.einsum("ki,ij,kj->k", Y, S.as_array(), Z)
    detection = Y[:, 0] * Z[:, 0]
    J = np.zeros(n + 1)
    # J[0] is the empty game.
    for a in range(1, n + 1):
        first = n - a
        J[a] = stage_costs[first:].sum() - sum(
            detection[first + b - 1] * J[a - b] for b in range(1, a)
        )
    return float(J[n])
