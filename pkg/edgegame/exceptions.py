class EdgeGameError(Exception):
    """Base class for every domain error raised by the library. The command
    line interface maps these errors to exit code 1.
    """


class DegenerateDenominatorError(EdgeGameError):
    """The common denominator of the closed-form stage equilibrium vanishes."""
    def __init__(self, message, stage=None):
        super().__init__(message)
        self.stage = stage


class PureSaddleError(EdgeGameError):
    """The mixed-strategy formulas leave the probability simplex, so the
    effective stage matrix has a pure saddle point instead.
    """
    def __init__(self, message, stage=None):
        super().__init__(message)
        self.stage = stage


class LengthMismatchError(EdgeGameError):
    pass


class NoBracketError(EdgeGameError):
    """A sign change of the continuum residual could not be established."""
    pass


class InfeasibleDegreeError(EdgeGameError):
    pass


class ParseError(EdgeGameError):
    """A roadmap file could not be parsed.

    Parameters:
        message (str): Human readable description of the problem.
        location (str, optional): Line or field context, e.g. "line 4" or
            "edges.2.num_stages".
    """
    def __init__(self, message, location=None):
        if location is not None:
            message = "{} (at {})".format(message, location)
        super().__init__(message)
        self.location = location


class InvariantViolationError(EdgeGameError):
    pass


class NoPathError(EdgeGameError):
    pass


class PathExplosionError(EdgeGameError):
    def __init__(self, message, count=None, cap=None):
        super().__init__(message)
        self.count = count
        self.cap = cap


class SolverFailureError(EdgeGameError):
    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = residuals or {}
