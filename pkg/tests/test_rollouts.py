import numpy as np
import pytest

from edgegame.exceptions import LengthMismatchError
from edgegame.games import play_rollout, simulate_rollouts, solve_edge_game


def test_rollout_mean_matches_value(stage_cost):
    solution = solve_edge_game(stage_cost, 3)
    mean, stderr = simulate_rollouts(
        stage_cost, solution.defender_policies, solution.attacker_policies,
        100000, seed=7
    )
    assert solution.value == pytest.approx(73.92, abs=0.01)
    assert abs(mean - solution.value) < 3. * stderr


def test_rollouts_are_reproducible(stage_cost):
    solution = solve_edge_game(stage_cost, 4)
    policies = solution.defender_policies, solution.attacker_policies
    first = simulate_rollouts(stage_cost, *policies, 1000, seed=3)
    second = simulate_rollouts(stage_cost, *policies, 1000, seed=3)
    assert first == second


def test_detection_stops_the_game(stage_cost):
    outcome = play_rollout(
        stage_cost, [(1., 0.)] * 3, [(1., 0.)] * 3, np.random.default_rng(0)
    )
    assert outcome.stop_stage == 1
    assert outcome.payoff == 30.
    assert outcome.actions == ((0, 0),)
    charged = play_rollout(
        stage_cost, [(1., 0.)] * 3, [(1., 0.)] * 3, np.random.default_rng(0),
        charge_stopping_mobility=True
    )
    assert charged.payoff == 40.


def test_unattacked_game_runs_to_the_end(stage_cost):
    outcome = play_rollout(
        stage_cost, [(0., 1.)] * 4, [(0., 1.)] * 4, np.random.default_rng(0)
    )
    assert outcome.stop_stage is None
    assert outcome.payoff == 40.
    mean, stderr = simulate_rollouts(
        stage_cost, [(0., 1.)] * 4, [(0., 1.)] * 4, 10, seed=0
    )
    assert mean == 40.
    assert stderr == 0.


def test_single_rollout_has_zero_standard_error(stage_cost):
    _, stderr = simulate_rollouts(stage_cost, [(.5, .5)], [(.5, .5)], 1, 0)
    assert stderr == 0.


def test_rollout_argument_checks(stage_cost):
    with pytest.raises(LengthMismatchError):
        simulate_rollouts(stage_cost, [(1., 0.)], [(1., 0.)] * 2, 10, 0)
    with pytest.raises(ValueError):
        simulate_rollouts(stage_cost, [(1., 0.)], [(1., 0.)], 0, 0)
    with pytest.raises(ValueError):
        simulate_rollouts(stage_cost, [(.7, .7)], [(1., 0.)], 10, 0)
