"""
Casson-Walker-Lescop invariants.

* surgery on a 2-bridge link D(a1, b1, ..., an) with rational coefficients,
* the Seifert double cover X of a candidate (both signs of e),
* lambda(M) = -q for 2/q-surgery on a knot with Alexander polynomial
  t^2 - 3t + 1 in a homology sphere with lambda = 0 (taken as given).

All arithmetic is in Fractions; eigenvalue signs of the 2x2 linking matrix
come from the signs of its determinant and trace.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .dedekind import dedekind_S, dedekind_sum
from .errors import DomainError
from .presentations import SeifertParams

__all__ = [
    "DSequence",
    "LinkingMatrix",
    "SeifertParams",
    "linking_number",
    "bracket_L",
    "bracket_K",
    "two_bridge_components",
    "lescop_two_bridge",
    "seifert_base_term",
    "lescop_seifert_X",
    "lescop_M_from_assumptions",
]


@dataclass(frozen=True)
class DSequence:
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if len(self.entries) % 2 != 1:
            raise DomainError("a D-sequence has odd length 2n - 1")

    @classmethod
    def parse(cls, text):
        return cls(tuple(int(x) for x in str(text).split(",")))

    @property
    def a(self):
        return self.entries[0::2]

    @property
    def b(self):
        return self.entries[1::2]


@dataclass(frozen=True)
class LinkingMatrix:
    c1: Fraction
    c2: Fraction
    ell: int

    @property
    def trace(self):
        return self.c1 + self.c2

    @property
    def det(self):
        return self.c1 * self.c2 - self.ell * self.ell

    def _signs(self):
        det, tr = self.det, self.trace
        if det == 0:
            raise DomainError("singular linking matrix")
        if det < 0:
            return 0, 1
        return (2, 0) if tr > 0 else (-2, 2)

    @property
    def signature(self):
        return self._signs()[0]

    @property
    def b_minus(self):
        return self._signs()[1]


def linking_number(D):
    return -sum(D.a)


def bracket_L(D, E):
    ell = linking_number(D)
    if E.ell != ell:
        raise DomainError(f"linking matrix has ell={E.ell}, D-sequence gives {ell}")
    a, b = D.a, D.b
    total = Fraction(0)
    for k in range(len(b)):
        total += b[k] * sum(a[: k + 1]) * sum(a[k + 1 :])
    return total - Fraction(ell * (ell * ell - 1), 12) + Fraction(ell * ell, 12) * E.trace


def bracket_K(p, q):
    if q <= 0:
        raise DomainError("[K_i] needs q_i > 0")
    return -Fraction(p * p + q * q + 1, 24 * q * q)


def _as_coefficient(c):
    # (p, q) pairs are taken literally so that q <= 0 can be rejected
    if isinstance(c, tuple):
        p, q = int(c[0]), int(c[1])
        if q <= 0:
            raise DomainError(f"surgery denominator must be positive, got {p}/{q}")
        return p, q
    c = Fraction(c)
    return c.numerator, c.denominator


def two_bridge_components(D, c1, c2):
    """Every intermediate of the 2-bridge surgery formula, plus lambda itself."""
    if not isinstance(D, DSequence):
        D = DSequence(tuple(D))
    p1, q1 = _as_coefficient(c1)
    p2, q2 = _as_coefficient(c2)
    E = LinkingMatrix(Fraction(p1, q1), Fraction(p2, q2), linking_number(D))
    sigma, b_minus = E.signature, E.b_minus
    L = bracket_L(D, E)
    K1, K2 = bracket_K(p1, q1), bracket_K(p2, q2)
    abs_p = q1 * q2 * abs(E.det)
    s1, s2 = dedekind_sum(p1, q1), dedekind_sum(p2, q2)
    lam = (-1) ** b_minus * q1 * q2 * (Fraction(p2, q2) * K1 + Fraction(p1, q1) * K2 + L) + abs_p * (
        Fraction(sigma, 8) + s1 / 2 + s2 / 2
    )
    return {
        "ell": E.ell,
        "trace": E.trace,
        "det": E.det,
        "signature": sigma,
        "b_minus": b_minus,
        "L": L,
        "K1": K1,
        "K2": K2,
        "abs_p": abs_p,
        "s1": s1,
        "s2": s2,
        "lambda": lam,
    }


def lescop_two_bridge(D, c1, c2):
    """lambda(S^3(L; p1/q1, p2/q2)) for the 2-bridge link L = D(...).

    Coefficients are Fractions or literal (p, q) pairs with q > 0.
    A singular linking matrix raises DomainError.
    """
    return two_bridge_components(D, c1, c2)["lambda"]


def seifert_base_term(alpha, beta):
    """-2ab + 25b/(24a) + 25a/(24b) + 1/(24ab) - 5/8: the part without S."""
    ab = alpha * beta
    return (
        -2 * ab
        + Fraction(25 * beta, 24 * alpha)
        + Fraction(25 * alpha, 24 * beta)
        + Fraction(1, 24 * ab)
        - Fraction(5, 8)
    )


def lescop_seifert_X(params):
    """lambda(X) for a Seifert candidate; e < 0 is the mirrored expression.

    Only the coprimality conditions are enforced here (parity of q1, q2 is
    not needed for the formula, see SeifertParams.check).
    """
    if params.alpha < 1 or params.beta < 1 or gcd(params.alpha, params.beta) != 1:
        raise DomainError(f"alpha, beta must be coprime positive integers: {params}")
    base = seifert_base_term(params.alpha, params.beta)
    S = dedekind_S(params)
    if params.e_sign > 0:
        return base - Fraction(5, 2) * S
    if params.e_sign < 0:
        return -(base + Fraction(5, 2) * S)
    raise DomainError("e_sign must be +1 or -1")


def lescop_M_from_assumptions(q):
    # recorded consequence of lambda(Sigma) = 0 and Delta = t^2 - 3t + 1
    return -q
