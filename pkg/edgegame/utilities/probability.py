import numpy as np


# Tolerance on the deviation of a probability vector from the simplex.
SIMPLEX_TOL = 1e-12


def clip_probability(p, tol=SIMPLEX_TOL):
    """Snaps a probability that is within `tol` of the unit interval onto it.
    Values further outside are returned unchanged so that callers can detect
    them.
    """
    if -tol <= p < 0.:
        return 0.
    if 1. < p <= 1. + tol:
        return 1.
    return p


def check_distribution(p, tol=SIMPLEX_TOL, name="distribution"):
    """Validates that the input is a probability vector.

    Parameters:
        p (array-like): Candidate probability vector.
        tol (float, optional): Allowed deviation from nonnegativity and from
            unit total mass.
        name (str, optional): Used in the error message.

    Returns:
        Numpy array: The input as a one-dimensional float array.
    """
    p = np.asarray(p, dtype=float).ravel()
    if p.size == 0 or not np.all(np.isfinite(p)):
        raise ValueError("{} must be a nonempty finite vector".format(name))
    if np.any(p < -tol) or abs(p.sum() - 1.) > tol:
        raise ValueError("{} is not in the probability simplex: {}".format(
            name, p
        ))
    return p
