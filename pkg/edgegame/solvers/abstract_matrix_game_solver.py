from abc import abstractmethod

import numpy as np

from ..exceptions import SolverFailureError


class AbstractMatrixGameSolver:
    """Abstract Matrix Game Solver Class

    This class implements the template functionalities of a solver for finite
    two-player zero-sum matrix games. Entries of the payoff matrix are paid by
    the row player (the minimizer) to the column player (the maximizer). The
    class validates inputs and certifies candidate solutions; computing the
    equilibrium itself is left to the abstract `solve` method.
    """
    def __init__(self, certificate_tol):
        """Initialize the parameters of the abstract matrix game solver object.

        Parameters:
            certificate_tol (float): Slack allowed when checking that the
                returned mixed strategies guarantee the returned value, and
                the largest accepted gap between the values of the two
                players' linear programs, per unit of the largest payoff
                magnitude (or of one for smaller payoffs).
        """
        self.certificate_tol = certificate_tol

    @staticmethod
    def validate(W):
        """Converts the payoff matrix to a two-dimensional float array and
        checks that it is finite and nonempty.
        """
        W = np.atleast_2d(np.asarray(W, dtype=float))
        if W.ndim != 2 or W.shape[0] < 1 or W.shape[1] < 1:
            raise ValueError("A payoff matrix needs at least one row and column.")
        if not np.all(np.isfinite(W)):
            raise ValueError("The payoff matrix must be finite.")
        return W

    def certify(self, W, value, row_mix, col_mix, dual_value=None):
        """Checks that the mixed strategies certify the value, i.e. that no
        column earns more than the value against the row mix and no row pays
        less than the value against the column mix.

        Returns:
            Dict: The residuals of the certificate.
        """
        residuals = {
            "row_guarantee": float(np.max(row_mix.dot(W)) - value),
            "col_guarantee": float(value - np.min(W.dot(col_mix))),
            "duality_gap": (
                0. if dual_value is None else float(abs(value - dual_value))
            ),
        }
        tol = self.certificate_tol * max(1., float(np.abs(W).max()))
        if max(residuals.values()) > tol:
            raise SolverFailureError(
                "Matrix game solution failed its certificate: {}".format(
                    residuals
                ),
                residuals=residuals
            )
        return residuals

    @abstractmethod
    def solve(self, W):
        """Computes the value of the matrix game together with a pair of
        optimal mixed strategies.

        Parameters:
            W (array-like): The payoff matrix with one row per action of the
                minimizing player and one column per action of the maximizing
                player.

        Returns:
            Tuple: The value `min_y max_z y'Wz`, the row player's optimal mixed
                strategy and the column player's optimal mixed strategy.
        """
        raise NotImplementedError()
