"""Exact Dedekind sums s(q, p) and the bounds used against them."""

from fractions import Fraction
from math import floor, gcd

from . import kernels
from .errors import DomainError


def sawtooth(x):
    """((x)): zero at integers, otherwise x - floor(x) - 1/2."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - floor(x) - Fraction(1, 2)


def _check(q, p):
    if not isinstance(p, int) or p <= 0:
        raise DomainError(f"Dedekind sum needs p > 0, got p={p}")
    if gcd(q, p) != 1:
        raise DomainError(f"Dedekind sum needs gcd(q, p) = 1, got ({q}, {p})")


def dedekind_sum(q, p):
    """s(q, p) = sum_{k=1}^{p-1} ((k/p)) ((kq/p)), exactly.

    >>> dedekind_sum(1, 5)
    Fraction(1, 5)
    >>> dedekind_sum(2, 5)
    Fraction(0, 1)
    """
    _check(q, p)
    return Fraction(kernels.dedekind_numerator(q, p), 4 * p * p)


def dedekind_sum_direct(q, p):
    """Literal sawtooth summation in rationals; slow, kept as a cross-check."""
    _check(q, p)
    return sum((sawtooth(Fraction(k, p)) * sawtooth(Fraction(k * q, p)) for k in range(1, p)), Fraction(0))


def s_one_closed_form(p):
    """s(1, p) = (p-1)(p-2)/(12p), the largest value of s(., p)."""
    return Fraction((p - 1) * (p - 2), 12 * p)


def reciprocity_rhs(q, p):
    """-1/4 + (p/q + q/p + 1/(pq))/12, which equals s(q,p) + s(p,q) for coprime p, q > 0."""
    return Fraction(-1, 4) + (Fraction(p, q) + Fraction(q, p) + Fraction(1, p * q)) / 12


def dedekind_S(params):
    """S = s(q1, alpha) + s(q2, beta) + 2 s(q3, 5) for a Seifert candidate."""
    return (
        dedekind_sum(params.q1, params.alpha)
        + dedekind_sum(params.q2, params.beta)
        + 2 * dedekind_sum(params.q3, 5)
    )
