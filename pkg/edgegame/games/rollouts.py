import collections

import numpy as np

from ..exceptions import LengthMismatchError
from ..utilities.probability import check_distribution


DEFEND, NO_DEFEND = 0, 1
ATTACK, NO_ATTACK = 0, 1


class RolloutOutcome(
    collections.namedtuple("RolloutOutcome", ["actions", "stop_stage", "payoff"])
):
    """The record of one simulated edge-game: the (defender, attacker) action
    indices of every stage played, the one-based stage at which the attack was
    detected (None if it never was) and the attacker payoff.
    """
    __slots__ = ()


def _active_probabilities(Y, Z):
    if len(Y) != len(Z):
        raise LengthMismatchError(
            "Defender and attacker policies cover {} and {} stages".format(
                len(Y), len(Z)
            )
        )
    y = np.array([check_distribution(p, name="defender policy")[0] for p in Y])
    z = np.array([check_distribution(p, name="attacker policy")[0] for p in Z])
    return y, z


def play_rollout(S, Y, Z, rng, charge_stopping_mobility=False):
    """Plays a single edge-game by sampling both players' actions stage by
    stage. The detection stage contributes its own stage cost and the game
    stops there.

    Parameters:
        S (StageCostMatrix): The stage cost matrix.
        Y, Z (sequence): Defender and attacker policies, one per stage.
        rng (numpy Generator): Source of randomness.
        charge_stopping_mobility (bool, optional): If true, the mobility cost
            s22 is charged once more when the game reaches the stopping state.

    Returns:
        RolloutOutcome: The sampled play.
    """
    y, z = _active_probabilities(Y, Z)
    costs = S.as_array()
    actions = []
    payoff = 0.
    for k in range(len(y)):
        i = DEFEND if rng.random() < y[k] else NO_DEFEND
        j = ATTACK if rng.random() < z[k] else NO_ATTACK
        actions.append((i, j))
        payoff += costs[i, j]
        if i == DEFEND and j == ATTACK:
            if charge_stopping_mobility:
                payoff += S.s22
            return RolloutOutcome(tuple(actions), k + 1, payoff)
    return RolloutOutcome(tuple(actions), None, payoff)


def simulate_rollouts(S, Y, Z, num_rollouts, seed,
                      charge_stopping_mobility=False):
    """Monte Carlo estimate of the expected attacker payoff of an edge-game
    under the given behavioral policies. All rollouts are simulated at once:
    a rollout stays alive until its first {Defend, Attack} pair.

    Parameters:
        S (StageCostMatrix): The stage cost matrix.
        Y, Z (sequence): Defender and attacker policies, one per stage.
        num_rollouts (int): Number of independent plays. Must be positive.
        seed (int): Seed of the generator owned by this call.
        charge_stopping_mobility (bool, optional): See `play_rollout`.

    Returns:
        Tuple: The sample mean of the attacker payoff and its standard error.
    """
    if int(num_rollouts) != num_rollouts or num_rollouts < 1:
        raise ValueError("The number of rollouts must be a positive integer.")
    y, z = _active_probabilities(Y, Z)
    rng = np.random.default_rng(seed)
    costs = S.as_array()
    n_stages = len(y)
    # Draw every action up front so that results only depend on the seed.
    defend = rng.random((num_rollouts, n_stages)) < y
    attack = rng.random((num_rollouts, n_stages)) < z
    payoff = np.zeros(num_rollouts)
    alive = np.ones(num_rollouts, dtype=bool)
    for k in range(n_stages):
        i = np.where(defend[:, k], DEFEND, NO_DEFEND)
        j = np.where(attack[:, k], ATTACK, NO_ATTACK)
        # Only plays still in progress collect the stage cost.
        payoff[alive] += costs[i[alive], j[alive]]
        stopped = alive & defend[:, k] & attack[:, k]
        if charge_stopping_mobility:
            payoff[stopped] += S.s22
        alive &= ~stopped
    mean = float(payoff.mean())
    if num_rollouts == 1:
        return mean, 0.
    return mean, float(payoff.std(ddof=1) / np.sqrt(num_rollouts))
