"""
Surgery data for the Seifert candidates.

M is 0-surgery on an axis J plus three fibres with coefficients
2a/q1, 2b/q2, 5/q3.  Its universal abelian (double) cover X is the same
picture upstairs with four fibres, coefficients a/q1, b/q2, 5/q3, 5/q3.
Only the coefficients are modelled.
"""

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import gcd

from .algebra import smith_normal_form
from .errors import DomainError, InvariantViolation


@dataclass(frozen=True)
class XPresentation:
    alpha: int
    beta: int
    q1: int
    q2: int
    q3: int

    @property
    def homology_consistent(self):
        """True when H_1(X) is Z/5, i.e. the coefficient equation gives +-1."""
        return abs(coefficient_equation(self)) == 1

    def to_json(self):
        return asdict(self)


@dataclass(frozen=True)
class MPresentation:
    alpha: int
    beta: int
    q1: int
    q2: int
    q3: int

    def __post_init__(self):
        a, b = self.alpha, self.beta
        if a < 1 or b < 1:
            raise DomainError("alpha, beta must be positive")
        if gcd(a, b) != 1:
            raise DomainError(f"gcd(alpha, beta) = {gcd(a, b)} != 1")
        if gcd(self.q1, 2 * a) != 1 or gcd(self.q2, 2 * b) != 1:
            raise DomainError("q1, q2 must be odd and coprime to alpha, beta")
        if gcd(self.q3, 5) != 1:
            raise DomainError("q3 must be prime to 5")

    def to_json(self):
        return asdict(self)


@dataclass(frozen=True, order=True)
class SeifertParams:
    """A candidate (alpha, beta, q1, q2, q3) together with the sign of e."""

    alpha: int
    beta: int
    q1: int
    q2: int
    q3: int
    e_sign: int = 1

    def check(self):
        """Raise DomainError unless the Figure-1 constraints hold."""
        MPresentation(self.alpha, self.beta, self.q1, self.q2, self.q3)
        if self.e_sign not in (1, -1):
            raise DomainError("e_sign must be +1 or -1")
        return self

    def x(self):
        return XPresentation(self.alpha, self.beta, self.q1, self.q2, self.q3)

    def to_json(self):
        return asdict(self)


def euler_e(x):
    """e = q1/alpha + q2/beta + q3/5 + q3/5."""
    return Fraction(x.q1, x.alpha) + Fraction(x.q2, x.beta) + Fraction(2 * x.q3, 5)


def coefficient_equation(x):
    """5b*q1 + 5a*q2 + 2ab*q3 = 5ab*e; this must be +-1 for H_1(X) = Z/5."""
    return 5 * x.beta * x.q1 + 5 * x.alpha * x.q2 + 2 * x.alpha * x.beta * x.q3


def h1_order_X(x):
    """|H_1(X)| = 25 a b |e|, or math.inf when e = 0."""
    order = 25 * x.alpha * x.beta * abs(euler_e(x))
    if order.denominator != 1:
        raise InvariantViolation(f"25*alpha*beta*e not integral for {x}")
    if order == 0:
        return math.inf
    if order != 5 * abs(coefficient_equation(x)):
        raise InvariantViolation(f"H_1 order and coefficient equation disagree for {x}")
    return int(order)


def h1_order_M_alpha_beta_1(q1, q2, q3):
    """|H_1(M)| = |10 q1 + 10 q2 + 4 q3| when alpha = beta = 1."""
    return abs(10 * q1 + 10 * q2 + 4 * q3)


def lift_double_cover(m):
    """(2a/q1, 2b/q2, 5/q3) downstairs -> (a/q1, b/q2, 5/q3, 5/q3) upstairs."""
    if not isinstance(m, MPresentation):
        m = MPresentation(*m)
    x = XPresentation(m.alpha, m.beta, m.q1, m.q2, m.q3)
    if x.homology_consistent and h1_order_X(x) != 5:
        raise InvariantViolation(f"coefficient equation is +-1 but |H_1(X)| != 5 for {x}")
    return x


def h1_group_from_linking(matrix):
    """Invariant factors of the cokernel of an integer linking matrix."""
    if len(matrix) != len(matrix[0]):
        raise DomainError("relation matrix must be square")
    return smith_normal_form(matrix)
