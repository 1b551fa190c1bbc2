"""Continuous-stage approximations of the parameterized edge-game value.

With the defense cost normalized to one, the value recursion
V_{k-1} - V_k = (r1 - r2 + r2 V_k) / (r1 - r2 + V_k) is replaced by the
ordinary differential equation

    dV/dk = (c - r2 V) / (V - c),  c := r2 - r1,

integrated backwards from the boundary V(K_e) = 1 (the value one stage before
the end of the discrete game). The continuum value V(k) is therefore compared
against the discrete value `values[k - 1]`.
"""
import logging

import numpy as np
from scipy import optimize

from .edge_game import solve_edge_game
from .stage_cost_matrix import StageCostMatrix
from ..exceptions import NoBracketError


logger = logging.getLogger(__name__)

# Residual accepted for the root of the implicit continuum equation.
ROOT_TOL = 1e-10


def _check_arguments(r1, r2, num_stages, stage):
    if not r1 >= 1.:
        raise ValueError("The penalty ratio r1 must be at least one.")
    if not 0. <= r2 < 1.:
        raise ValueError("The mobility ratio r2 must lie in [0, 1).")
    if int(num_stages) != num_stages or num_stages < 1:
        raise ValueError("The number of stages must be a positive integer.")
    if int(stage) != stage or not 1 <= stage <= num_stages:
        raise ValueError("The stage must be an integer in [1, {}].".format(
            num_stages
        ))


def _square_root_branch(r1, num_stages, stage):
    return -r1 + np.sqrt(
        r1 ** 2 + 2. * r1 * num_stages + 2. * r1 * (1. - stage) + 1.
    )


def implicit_residual(V, r1, r2, num_stages, stage):
    """Residual of the implicit continuum solution for a positive mobility
    ratio,

        (V - 1) / r2 - (r2 - 1) c log(|r2 V - c| / r1) / r2^2 - (K_e - k),

    which is the integral of dk/dV = (V - c) / (c - r2 V) from the boundary
    value one up to `V`. The residual is increasing in `V` on [1, inf) and
    vanishes at V = 1 for the last stage.
    """
    c = r2 - r1
    # |r2 V - c| / r1 = 1 + r2 (V - 1) / r1 for V >= 1.
    log_term = np.log1p(r2 * (V - 1.) / r1)
    return (
        (V - 1.) / r2 - (r2 - 1.) * c * log_term / r2 ** 2 -
        (num_stages - stage)
    )


def analytic_value(r1, r2, num_stages, stage):
    """The value of a parameterized edge-game (unit defense cost) at a given
    stage in the limit of vanishing inter-stage time.

    For r2 = 0 the value has the closed form
    -r1 + sqrt(r1^2 + 2 r1 K_e + 2 r1 (1 - k) + 1). Otherwise it is the root of
    `implicit_residual`, found by bisection on [1, V_upper] where V_upper is
    the approximate value plus a margin of 10 r1.

    Parameters:
        r1 (float): The penalty ratio, at least one.
        r2 (float): The mobility ratio in [0, 1).
        num_stages (int): The number of stages K_e of the edge.
        stage (int): The stage k in [1, K_e].

    Returns:
        Float: The continuum value V(k), equal to one at the last stage.
    """
    _check_arguments(r1, r2, num_stages, stage)
    if r2 == 0.:
        return float(_square_root_branch(r1, num_stages, stage))
    if stage == num_stages:
        return 1.

    def residual(V):
        return implicit_residual(V, r1, r2, num_stages, stage)

    lower = 1.
    upper = approx_value(r1, r2, num_stages, stage) + 10. * r1
    if residual(upper) < 0.:
        # The residual grows at least as fast as V - 1, so this bound always
        # brackets the root in the valid parameter regime.
        upper = max(upper, 1. + (num_stages - stage))
    if not (residual(lower) <= 0. <= residual(upper)):
        raise NoBracketError(
            "No sign change of the continuum residual on [{}, {}] for "
            "r1 = {}, r2 = {}".format(lower, upper, r1, r2)
        )
    root = optimize.bisect(
        residual, lower, upper, xtol=1e-15, rtol=4. * np.finfo(float).eps,
        maxiter=500
    )
    logger.debug(
        "Continuum root V(%d) = %.12f with residual %.3e",
        stage, root, residual(root)
    )
    return float(root)


def approx_value(r1, r2, num_stages, stage):
    """Approximate continuum value: the square-root solution for r2 = 0 plus
    the linear mobility term r2 (K_e - k).
    """
    _check_arguments(r1, r2, num_stages, stage)
    return float(
        _square_root_branch(r1, num_stages, stage) + r2 * (num_stages - stage)
    )


def approximation_error(r1, r2, num_stages):
    """Percentage error of the approximate value at the first stage with
    respect to the value of the discrete recursion with unit defense cost.

    Parameters:
        r1 (float): The penalty ratio, at least one.
        r2 (float): The mobility ratio in [0, 1).
        num_stages (int): The number of stages K_e of the edge.

    Returns:
        Float: 100 |approx - V_0| / |V_0|.
    """
    recursive = solve_edge_game(
        StageCostMatrix.from_ratios(1., r1, r2), num_stages
    ).value
    if recursive == 0.:
        raise ZeroDivisionError("The recursive edge-game value is zero.")
    approx = approx_value(r1, r2, num_stages, 1)
    return 100. * abs(approx - recursive) / abs(recursive)
