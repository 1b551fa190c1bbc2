import numpy as np
import pytest

from edgegame.exceptions import DegenerateDenominatorError, LengthMismatchError
from edgegame.games import (
    StageCostMatrix, edge_game_value, forward_payoff, horizon_profile,
    parameterized_recursion, solve_edge_game
)


@pytest.mark.parametrize("num_stages, expected", [
    (1, 30.), (2, 53.333333), (3, 73.921569), (6, 127.7598),
])
def test_default_game_values(stage_cost, num_stages, expected):
    solution = solve_edge_game(stage_cost, num_stages)
    assert solution.value == pytest.approx(expected, abs=1e-3)
    assert solution.values[-1] == 0.
    assert len(solution.defender_policies) == num_stages


def test_last_stage_policies(stage_cost):
    solution = solve_edge_game(stage_cost, 4)
    assert solution.defender_policies[-1].p_active == pytest.approx(1.)
    assert solution.attacker_policies[-1].p_active == pytest.approx(1. / 3.)


def test_value_grows_with_stages(stage_cost):
    values = [edge_game_value(stage_cost, K) for K in range(1, 30)]
    assert np.all(np.diff(values) > 0.)


def test_forward_payoff_matches_backward_value(rng):
    for _ in range(100):
        S = StageCostMatrix.from_ratios(
            rng.uniform(1e-3, 100.), rng.uniform(1., 5.), rng.uniform(0., 1.)
        )
        K = int(rng.integers(1, 51))
        solution = solve_edge_game(S, K)
        J = forward_payoff(
            S, solution.defender_policies, solution.attacker_policies
        )
        assert J == pytest.approx(solution.value, rel=1e-9, abs=1e-9)


def test_forward_payoff_of_pure_policies(stage_cost):
    # Defend and attack at once: the game stops after one stage.
    assert forward_payoff(stage_cost, [(1., 0.)] * 3, [(1., 0.)] * 3) == 30.
    # Never attack and never defend: mobility cost at every stage.
    assert forward_payoff(stage_cost, [(0., 1.)] * 3, [(0., 1.)] * 3) == 30.
    assert forward_payoff(stage_cost, [], []) == 0.


def test_forward_payoff_length_mismatch(stage_cost):
    with pytest.raises(LengthMismatchError):
        forward_payoff(stage_cost, [(1., 0.)] * 2, [(1., 0.)] * 3)


def test_first_stage_probabilities_vanish_with_length(stage_cost):
    horizons = [1, 2, 5, 10, 20, 50]
    profile = horizon_profile(stage_cost, horizons)
    assert list(profile["num_stages"]) == horizons
    assert np.all(np.diff(profile["p_defend_first"]) <= 1e-12)
    assert np.all(np.diff(profile["p_attack_first"]) <= 1e-12)
    long_game = solve_edge_game(stage_cost, 200)
    assert long_game.defender_policies[0].p_active < 0.05
    assert long_game.attacker_policies[0].p_active < 0.05


def test_active_probabilities_grow_within_a_game(rng):
    for _ in range(200):
        S = StageCostMatrix.from_ratios(
            rng.uniform(1e-3, 100.), rng.uniform(1.5, 5.), rng.uniform(0., 0.9)
        )
        K = int(rng.integers(2, 51))
        Y, Z = solve_edge_game(S, K).policy_arrays()
        # Stage k plays row k - 1; the active move is column 0.
        assert np.all(np.diff(Y[:, 0]) >= -1e-12)
        assert np.all(np.diff(Z[:, 0]) >= -1e-12)


def test_zero_determinant_game_keeps_pure_saddle_values():
    S = StageCostMatrix(2., 1., 4., 2.)
    solution = solve_edge_game(S, 4)
    # Each stage adds one unit: the attacker waits until the last stage.
    np.testing.assert_allclose(solution.values, [5., 4., 3., 2., 0.])
    Y, Z = solution.policy_arrays()
    np.testing.assert_allclose(Y, [[1., 0.]] * 4)
    np.testing.assert_allclose(Z, [[0., 1.]] * 3 + [[1., 0.]])
    J = forward_payoff(
        S, solution.defender_policies, solution.attacker_policies
    )
    assert J == pytest.approx(5.)


@pytest.mark.parametrize("r1", [1., 2.])
def test_value_grows_sublinearly(r1):
    S = StageCostMatrix.from_ratios(1., r1, 0.)
    for K in [10, 20, 50]:
        assert (
            solve_edge_game(S, 4 * K).value / solve_edge_game(S, K).value < 2.5
        )


def test_parameterized_values_follow_recursion():
    r1, r2 = 2., 0.2
    solution = solve_edge_game(StageCostMatrix.from_ratios(1., r1, r2), 25)
    V = 0.
    for k in range(25, 0, -1):
        V = parameterized_recursion(r1, r2, V)
        assert solution.values[k - 1] == pytest.approx(V)


def test_failing_stage_is_reported():
    with pytest.raises(DegenerateDenominatorError) as info:
        solve_edge_game(StageCostMatrix(1., 1., 1., 1.), 3)
    assert info.value.stage == 3


@pytest.mark.parametrize("num_stages", [0, -2, 2.5])
def test_invalid_number_of_stages(stage_cost, num_stages):
    with pytest.raises(ValueError):
        solve_edge_game(stage_cost, num_stages)


def test_policy_arrays(stage_cost):
    Y, Z = solve_edge_game(stage_cost, 5).policy_arrays()
    assert Y.shape == Z.shape == (5, 2)
    np.testing.assert_allclose(Y.sum(axis=1), 1.)
