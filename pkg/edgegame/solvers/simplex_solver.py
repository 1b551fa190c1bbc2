import logging

import numpy as np

from .abstract_matrix_game_solver import AbstractMatrixGameSolver
from ..exceptions import SolverFailureError


logger = logging.getLogger(__name__)


class SimplexSolver(AbstractMatrixGameSolver):
    """Simplex Solver Class

    Solves a zero-sum matrix game as a linear program with a dense tableau
    simplex method. The payoff matrix is first mapped affinely onto [1, 2],
    which keeps every entry positive and the tableau equally well scaled for
    any payoff magnitude; the equilibrium strategies are unchanged. The
    minimizing row player's program is then

        maximize 1'u  subject to  W'u <= 1,  u >= 0,

    whose optimal value is the reciprocal of the rescaled game value. The
    origin is feasible, so no first phase is needed, and the column player's
    program is the dual, read off the objective row of the final tableau.

    Pivots follow Bland's rule: the entering variable is the lowest-index
    column with a negative reduced cost and ties in the ratio test leave by
    the lowest-index basic variable. The rule rules out cycling on degenerate
    programs, which are common here since many paths share edges.
    """
    def __init__(self, pivot_tol=1e-9, certificate_tol=1e-8, max_iter=None):
        """Initialize the parameters of the simplex solver object.

        Parameters:
            pivot_tol (float, optional): Reduced costs above `-pivot_tol` count
                as optimal and column entries below `pivot_tol` are not pivoted
                on.
            certificate_tol (float, optional): See `AbstractMatrixGameSolver`.
            max_iter (int, optional): Maximum number of pivots. Defaults to
                fifty times the number of variables plus constraints.
        """
        super().__init__(certificate_tol)
        self.pivot_tol = pivot_tol
        self.max_iter = max_iter

    def pivot(self, T, row, col):
        """Pivots the tableau in place on the given entry."""
        T[row] /= T[row, col]
        factors = T[:, col].copy()
        factors[row] = 0.
        T -= np.outer(factors, T[row])

    def select_pivot(self, T, basis):
        """Applies Bland's rule. Returns None at optimality."""
        # Entering variable: the lowest column with a negative reduced cost.
        reduced = T[-1, :-1]
        entering = np.flatnonzero(reduced < -self.pivot_tol)
        if entering.size == 0:
            return None
        col = int(entering[0])
        column = T[:-1, col]
        rows = np.flatnonzero(column > self.pivot_tol)
        if rows.size == 0:
            raise SolverFailureError(
                "The linear program is unbounded in column {}".format(col)
            )
        # Minimum ratio test over the rows that can limit the step.
        ratios = T[rows, -1] / column[rows]
        best = ratios.min()
        ties = rows[ratios <= best + self.pivot_tol * max(1., abs(best))]
        row = int(min(ties, key=lambda r: basis[r]))
        return row, col

    def solve(self, W):
        """Implementation of abstract base class method."""
        W = self.validate(W)
        low = W.min()
        # Rescale onto [1, 2]. A constant matrix keeps a unit span.
        span = W.max() - low
        if span <= 0.:
            span = 1.
        A = ((W - low) / span + 1.).T
        n_cons, n_vars = A.shape
        # Tableau with the constraints on top and the objective row at the
        # bottom; the last column holds the right-hand side.
        T = np.zeros((n_cons + 1, n_vars + n_cons + 1))
        T[:n_cons, :n_vars] = A
        T[:n_cons, n_vars:n_vars + n_cons] = np.eye(n_cons)
        T[:n_cons, -1] = 1.
        T[-1, :n_vars] = -1.
        basis = list(range(n_vars, n_vars + n_cons))

        max_iter = self.max_iter or 50 * (n_vars + n_cons)
        for n_iters in range(max_iter + 1):
            pivot = self.select_pivot(T, basis)
            if pivot is None:
                break
            row, col = pivot
            self.pivot(T, row, col)
            basis[row] = col
        else:
            raise SolverFailureError(
                "Simplex did not converge within {} pivots".format(max_iter),
                residuals={"reduced_cost": float(T[-1, :-1].min())}
            )
        logger.debug(
            "Simplex solved a %dx%d game in %d pivots",
            W.shape[0], W.shape[1], n_iters
        )

        # Primal solution from the basis, dual from the slack columns of the
        # objective row.
        u = np.zeros(n_vars)
        for r, var in enumerate(basis):
            if var < n_vars:
                u[var] = T[r, -1]
        x = np.maximum(T[-1, n_vars:n_vars + n_cons], 0.)
        if u.sum() <= 0. or x.sum() <= 0.:
            raise SolverFailureError("Degenerate simplex solution")
        # Undo the rescaling.
        row_value = (1. / u.sum() - 1.) * span + low
        col_value = (1. / x.sum() - 1.) * span + low
        row_mix = u / u.sum()
        col_mix = x / x.sum()
        self.certify(W, row_value, row_mix, col_mix, dual_value=col_value)
        return float(row_value), row_mix, col_mix
