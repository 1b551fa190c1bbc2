import collections

import numpy as np

from ..utilities.probability import SIMPLEX_TOL


class StageCostMatrix(
    collections.namedtuple("StageCostMatrix", ["s11", "s12", "s21", "s22"])
):
    """Stage Cost Matrix Class

    The 2x2 attacker payoff collected at every stage of an edge-game. Rows are
    the defender actions {Defend, No Defend} and columns the attacker actions
    {Attack, No Attack}, so that `s11` is the cost of defending against an
    attack, `s12` the cost of defending for nothing, `s21` the security loss
    of an undetected attack and `s22` the mobility cost of an uneventful
    stage.

    Instances are immutable and hashable; they can therefore key caches of
    solved edge-games.
    """
    __slots__ = ()

    def __new__(cls, s11, s12, s21, s22):
        entries = [float(s) for s in (s11, s12, s21, s22)]
        if not all(np.isfinite(entries)):
            raise ValueError("Stage costs must be finite: {}".format(entries))
        return super().__new__(cls, *entries)

    @classmethod
    def from_ratios(cls, s11, r1, r2):
        """Constructs the parameterized stage cost matrix

            S = s11 * [[1, 1], [r1, r2]],

        in which `r1` is the penalty ratio (security loss over defense cost)
        and `r2` the mobility ratio (mobility cost over defense cost).

        Parameters:
            s11 (float): The cost of defense. Must be positive.
            r1 (float): The penalty ratio. Must be at least one.
            r2 (float): The mobility ratio. Must be less than one.
        """
        if not s11 > 0.:
            raise ValueError("The defense cost s11 must be positive.")
        if not r1 >= 1.:
            raise ValueError("The penalty ratio r1 must be at least one.")
        if not r2 < 1.:
            raise ValueError("The mobility ratio r2 must be less than one.")
        return cls(s11, s11, r1 * s11, r2 * s11)

    @classmethod
    def from_sequence(cls, values):
        """Builds the matrix from four row-major values, either as a sequence
        or as a comma separated string such as "30,30,70,10".
        """
        if isinstance(values, str):
            values = [v for v in values.split(",") if v.strip()]
        values = [float(v) for v in values]
        if len(values) != 4:
            raise ValueError(
                "Expected four stage costs s11,s12,s21,s22; got {}".format(
                    len(values)
                )
            )
        return cls(*values)

    @property
    def r1(self):
        """The penalty ratio s21 / s11."""
        if self.s11 == 0.:
            raise ZeroDivisionError("r1 is undefined when s11 is zero.")
        return self.s21 / self.s11

    @property
    def r2(self):
        """The mobility ratio s22 / s11."""
        if self.s11 == 0.:
            raise ZeroDivisionError("r2 is undefined when s11 is zero.")
        return self.s22 / self.s11

    @property
    def det(self):
        return self.s11 * self.s22 - self.s12 * self.s21

    def as_array(self):
        return np.array([[self.s11, self.s12], [self.s21, self.s22]])

    def to_string(self):
        return ",".join("{:g}".format(s) for s in self)


class MixedPolicy2(
    collections.namedtuple("MixedPolicy2", ["p_active", "p_passive"])
):
    """A mixed strategy over two actions. The active action is Defend for the
    defender and Attack for the attacker.
    """
    __slots__ = ()

    def __new__(cls, p_active, p_passive=None):
        p_active = float(p_active)
        if p_passive is None:
            p_passive = 1. - p_active
        p_passive = float(p_passive)
        if (
            p_active < -SIMPLEX_TOL or p_passive < -SIMPLEX_TOL or
            abs(p_active + p_passive - 1.) > SIMPLEX_TOL
        ):
            raise ValueError("Not a mixed policy: [{}, {}]".format(
                p_active, p_passive
            ))
        return super().__new__(cls, p_active, p_passive)

    @classmethod
    def pure(cls, active):
        return cls(1., 0.) if active else cls(0., 1.)

    def as_array(self):
        return np.array([self.p_active, self.p_passive])
