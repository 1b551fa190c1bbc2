import collections

import numpy as np

from .stage_cost_matrix import MixedPolicy2
from ..exceptions import DegenerateDenominatorError, PureSaddleError
from ..utilities.probability import clip_probability


# Below this magnitude the denominator of the closed-form equilibrium is
# treated as zero.
DENOMINATOR_TOL = 1e-12

# Entry (1, 1) is zero: after {Defend, Attack} the game stops and the
# continuation value is not collected.
DECISION_MATRIX = np.array([[0., 1.], [1., 1.]])


class StageGame(
    collections.namedtuple("StageGame", ["stage_cost", "continuation_value"])
):
    """Stage Game Class

    A single stage of an edge-game with one stopping detection. The matrix
    game played at the stage is the effective matrix A = V_k * D + S, where
    `V_k` is the value of the remaining game and `D` the decision matrix that
    removes the continuation after a detected attack.
    """
    __slots__ = ()

    decision_matrix = DECISION_MATRIX

    def effective_matrix(self):
        return (
            self.continuation_value * self.decision_matrix +
            self.stage_cost.as_array()
        )

    def solve(self):
        """Solves the stage game in closed form, falling back on the pure
        saddle point of the effective matrix when the mixed formulas leave the
        simplex.

        Returns:
            Tuple: The value of the stage game (the value of the game one stage
                earlier) and the defender and attacker equilibrium policies.
        """
        try:
            return stage_solve(self.stage_cost, self.continuation_value)
        except PureSaddleError:
            return pure_saddle(self.effective_matrix())


def stage_solve(S, V_k):
    """Computes the unique interior Nash equilibrium of the effective stage
    matrix A = V_k * D + S in closed form. The defender minimizes and the
    attacker maximizes the attacker payoff. With the common denominator

        den = s11 - s12 - s21 + s22 - V_k,

    the defender plays y = [s22 - s21, s11 - s12 - V_k] / den, the attacker
    plays z = [s22 - s12, s11 - s21 - V_k] / den and the value one stage
    earlier is V_k + (det S - s22 * V_k) / den.

    Parameters:
        S (StageCostMatrix): The stage cost matrix.
        V_k (float): The value of the game from the next stage onwards.

    Returns:
        Tuple: The value `V_{k-1}`, the defender policy and the attacker policy
            (both `MixedPolicy2`).
    """
    den = S.s11 - S.s12 - S.s21 + S.s22 - V_k
    if abs(den) <= DENOMINATOR_TOL:
        raise DegenerateDenominatorError(
            "Equilibrium denominator {:.3e} vanishes for V_k = {}".format(
                den, V_k
            )
        )
    # Each player's mix makes the other indifferent between its moves.
    y = [
        clip_probability((S.s22 - S.s21) / den),
        clip_probability((S.s11 - S.s12 - V_k) / den),
    ]
    z = [
        clip_probability((S.s22 - S.s12) / den),
        clip_probability((S.s11 - S.s21 - V_k) / den),
    ]
    if not all(0. <= p <= 1. for p in y + z):
        raise PureSaddleError(
            "Mixed formulas leave the simplex: y = {}, z = {}".format(y, z)
        )
    # Value of the effective matrix under these mixes.
    V_prev = V_k + (S.det - S.s22 * V_k) / den
    return V_prev, MixedPolicy2(*y), MixedPolicy2(*z)


def pure_saddle(A, tol=1e-12):
    """Finds a pure saddle point of a 2x2 matrix game with a minimizing row
    player and a maximizing column player. Ties are broken in favour of the
    lowest index.

    Parameters:
        A (numpy array): The 2x2 payoff matrix (payoff to the column player).
        tol (float, optional): Tolerance on the gap between the upper and lower
            pure values.

    Returns:
        Tuple: The value together with the degenerate row and column policies.
    """
    A = np.asarray(A, dtype=float)
    # Minimax row against maximin column.
    row_max = A.max(axis=1)
    col_min = A.min(axis=0)
    i = int(np.argmin(row_max))
    j = int(np.argmax(col_min))
    upper, lower = row_max[i], col_min[j]
    if upper - lower > tol:
        raise PureSaddleError(
            "No pure saddle point: upper value {} exceeds lower value {}".format(
                upper, lower
            )
        )
    return (
        float(A[i, j]), MixedPolicy2.pure(i == 0), MixedPolicy2.pure(j == 0)
    )


def final_stage_policies(r1, r2):
    """The equilibrium of the last stage of a parameterized edge-game, where
    the continuation value is zero: the defender always defends while the
    attacker attacks with probability (1 - r2) / (r1 - r2).
    """
    if r1 == r2:
        raise ValueError("The final-stage policies are undefined for r1 = r2.")
    z = (1. - r2) / (r1 - r2)
    return MixedPolicy2(1., 0.), MixedPolicy2(z, (r1 - 1.) / (r1 - r2))


def parameterized_recursion(r1, r2, V_k, s11=1.):
    """One step of the value recursion for the parameterized stage cost
    s11 * [[1, 1], [r1, r2]]. The continuation value `V_k` is measured in units
    of the defense cost `s11` and the result is scaled back by `s11`, so the
    default of one keeps both in units of the defense cost.
    """
    den = r2 - r1 - V_k
    if abs(den) <= DENOMINATOR_TOL:
        raise DegenerateDenominatorError(
            "Parameterized denominator vanishes for V_k = {}".format(V_k)
        )
    return s11 * (V_k + (r2 - r1 - r2 * V_k) / den)
