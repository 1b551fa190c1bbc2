import numpy as np
import pytest

from edgegame.exceptions import DegenerateDenominatorError, PureSaddleError
from edgegame.games import (
    MixedPolicy2, StageCostMatrix, StageGame, final_stage_policies,
    parameterized_recursion, pure_saddle, stage_solve
)


def minimax_2x2(A):
    """Value of a 2x2 game with a minimizing row player by direct search over
    the breakpoints of the piecewise linear upper envelope.
    """
    candidates = [0., 1.]
    den = A[0, 0] - A[1, 0] - A[0, 1] + A[1, 1]
    if den != 0.:
        p = (A[1, 1] - A[1, 0]) / den
        if 0. < p < 1.:
            candidates.append(p)
    return min(
        max(p * A[0, j] + (1. - p) * A[1, j] for j in range(2))
        for p in candidates
    )


def test_first_stage_of_default_game(stage_cost):
    value, y, z = stage_solve(stage_cost, 0.)
    assert value == pytest.approx(30.)
    assert y.p_active == pytest.approx(1.)
    assert z.p_active == pytest.approx(1. / 3.)


def test_second_stage_of_default_game(stage_cost):
    value, y, z = stage_solve(stage_cost, 30.)
    assert value == pytest.approx(160. / 3.)
    assert y.p_active == pytest.approx(2. / 3.)
    assert z.p_active == pytest.approx(2. / 9.)


def test_closed_form_matches_minimax_oracle(rng):
    for _ in range(1000):
        S = StageCostMatrix.from_ratios(
            rng.uniform(1e-3, 100.), rng.uniform(1., 5.), rng.uniform(0., 1.)
        )
        V = rng.uniform(0., 200.)
        game = StageGame(S, V)
        A = game.effective_matrix()
        value, y, z = game.solve()
        assert value == pytest.approx(minimax_2x2(A), rel=1e-9, abs=1e-9)
        # The policies guarantee the value against every pure reply.
        assert np.max(y.as_array().dot(A)) <= value + 1e-9 * max(1., value)
        assert np.min(A.dot(z.as_array())) >= value - 1e-9 * max(1., value)


def test_effective_matrix_drops_continuation_after_detection(stage_cost):
    A = StageGame(stage_cost, 5.).effective_matrix()
    np.testing.assert_allclose(A, [[30., 35.], [75., 15.]])


def test_degenerate_denominator():
    with pytest.raises(DegenerateDenominatorError):
        stage_solve(StageCostMatrix(1., 1., 1., 1.), 0.)


def test_pure_saddle():
    value, y, z = pure_saddle(np.array([[1., 2.], [0., 3.]]))
    assert value == 2.
    assert y == MixedPolicy2(1., 0.)
    assert z == MixedPolicy2(0., 1.)
    with pytest.raises(PureSaddleError):
        pure_saddle(np.array([[0., 1.], [1., 0.]]))


def test_stage_game_falls_back_on_pure_saddle():
    # Defending is dominated, so the closed form leaves the simplex.
    S = StageCostMatrix(5., 6., 1., 3.)
    with pytest.raises(PureSaddleError):
        stage_solve(S, 0.)
    value, y, z = StageGame(S, 0.).solve()
    assert value == pytest.approx(3.)
    assert y == MixedPolicy2(0., 1.)
    assert z == MixedPolicy2(0., 1.)


def test_final_stage_policies():
    y, z = final_stage_policies(7. / 3., 1. / 3.)
    assert y == MixedPolicy2(1., 0.)
    assert z.p_active == pytest.approx(1. / 3.)
    with pytest.raises(ValueError):
        final_stage_policies(1., 1.)


def test_parameterized_recursion_matches_stage_solve():
    s11, r1, r2 = 30., 7. / 3., 1. / 3.
    S = StageCostMatrix.from_ratios(s11, r1, r2)
    V = 0.
    for _ in range(5):
        expected = stage_solve(S, V)[0]
        assert s11 * parameterized_recursion(r1, r2, V / s11) == pytest.approx(
            expected
        )
        V = expected


def test_parameterized_recursion_scales_by_defense_cost():
    s11, r1, r2 = 30., 7. / 3., 1. / 3.
    S = StageCostMatrix.from_ratios(s11, r1, r2)
    V = 2.
    assert parameterized_recursion(r1, r2, V, s11) == pytest.approx(
        stage_solve(S, s11 * V)[0]
    )
    assert parameterized_recursion(r1, r2, V, s11) == pytest.approx(
        s11 * parameterized_recursion(r1, r2, V)
    )


def test_zero_determinant_stage_is_a_pure_saddle():
    S = StageCostMatrix(2., 1., 4., 2.)
    assert S.det == 0.
    # Mixed formulas put the defender outside the simplex.
    with pytest.raises(PureSaddleError):
        stage_solve(S, 0.)
    value, y, z = StageGame(S, 0.).solve()
    assert value == 2.
    assert y == MixedPolicy2.pure(True)
    assert z == MixedPolicy2.pure(True)


def test_stage_cost_matrix_construction():
    S = StageCostMatrix.from_sequence("30,30,70,10")
    assert S == StageCostMatrix(30, 30, 70, 10)
    assert S.r1 == pytest.approx(7. / 3.)
    assert S.r2 == pytest.approx(1. / 3.)
    assert S.det == pytest.approx(-1800.)
    assert tuple(
        StageCostMatrix.from_ratios(30., 7. / 3., 1. / 3.)
    ) == pytest.approx(tuple(S))
    with pytest.raises(ValueError):
        StageCostMatrix.from_sequence("1,2,3")
    with pytest.raises(ValueError):
        StageCostMatrix.from_ratios(1., 0.5, 0.1)
    with pytest.raises(ValueError):
        StageCostMatrix.from_ratios(1., 2., 1.)
    with pytest.raises(ZeroDivisionError):
        StageCostMatrix(0., 1., 1., 1.).r1


def test_mixed_policy_validation():
    assert MixedPolicy2(0.25).p_passive == pytest.approx(0.75)
    with pytest.raises(ValueError):
        MixedPolicy2(0.5, 0.6)
    with pytest.raises(ValueError):
        MixedPolicy2(-0.1)
