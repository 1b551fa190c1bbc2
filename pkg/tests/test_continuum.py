import numpy as np
import pytest

from edgegame.games import (
    StageCostMatrix, analytic_value, approx_value, approximation_error,
    error_profile, implicit_residual, solve_edge_game
)


@pytest.mark.parametrize("r1", [1., 2., 5.])
def test_closed_form_without_mobility_cost(r1):
    K = 40
    assert analytic_value(r1, 0., K, K) == pytest.approx(1.)
    expected = -r1 + np.sqrt(r1 ** 2 + 2. * r1 * K + 1.)
    assert analytic_value(r1, 0., K, 1) == pytest.approx(expected)
    assert approx_value(r1, 0., K, 1) == pytest.approx(expected)


def test_implicit_root_has_small_residual(rng):
    for _ in range(50):
        r1 = rng.uniform(1., 5.)
        r2 = rng.uniform(0.01, 0.9)
        K = int(rng.integers(2, 101))
        k = int(rng.integers(1, K + 1))
        V = analytic_value(r1, r2, K, k)
        assert V >= 1.
        assert abs(implicit_residual(V, r1, r2, K, k)) < 1e-10


def test_implicit_value_at_last_stage():
    assert analytic_value(2., 0.3, 50, 50) == 1.
    assert implicit_residual(1., 2., 0.3, 50, 50) == 0.


@pytest.mark.parametrize("r1", [1., 2.])
@pytest.mark.parametrize("r2", [0.01, 0.05])
@pytest.mark.parametrize("K", [100, 200])
def test_implicit_value_tracks_recursion(r1, r2, K):
    recursive = solve_edge_game(StageCostMatrix.from_ratios(1., r1, r2), K)
    analytic = analytic_value(r1, r2, K, 1)
    assert analytic == pytest.approx(recursive.value, rel=0.05)


def test_continuum_value_decreases_along_the_edge():
    values = [analytic_value(2., 0.2, 30, k) for k in range(1, 31)]
    assert np.all(np.diff(values) < 0.)


def test_approximation_with_mobility_cost():
    recursive = solve_edge_game(StageCostMatrix.from_ratios(1., 2., 0.05), 100)
    assert approx_value(2., 0.05, 100, 1) == pytest.approx(
        recursive.value, rel=0.15
    )


@pytest.mark.parametrize("r1", [1., 2.])
def test_approximation_error_shrinks_with_stages(r1):
    errors = [approximation_error(r1, 0., K) for K in [20, 50, 100, 200]]
    assert np.all(np.diff(errors) < 0.)


def test_error_profile_layout():
    profile = error_profile([1., 2.], [0., 0.1], [20, 50])
    assert list(profile.columns) == ["r1", "r2", "num_stages", "error_pct"]
    assert len(profile) == 8
    assert np.all(profile["error_pct"] >= 0.)


@pytest.mark.parametrize("args", [
    (0.5, 0.1, 10, 1), (2., 1., 10, 1), (2., -0.1, 10, 1), (2., 0.1, 10, 0),
    (2., 0.1, 10, 11), (2., 0.1, 0, 1),
])
def test_invalid_arguments(args):
    with pytest.raises(ValueError):
        analytic_value(*args)
