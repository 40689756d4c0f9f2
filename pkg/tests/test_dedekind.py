import random
from fractions import Fraction
from math import gcd

import pytest

from seifert_surgery.dedekind import (
    dedekind_S,
    dedekind_sum,
    dedekind_sum_direct,
    reciprocity_rhs,
    s_one_closed_form,
    sawtooth,
)
from seifert_surgery.errors import DomainError
from seifert_surgery.presentations import SeifertParams


@pytest.mark.parametrize(
    "x, expected",
    [(Fraction(1, 2), 0), (3, 0), (Fraction(1, 5), Fraction(-3, 10)), (Fraction(-1, 5), Fraction(3, 10))],
)
def test_sawtooth(x, expected):
    assert sawtooth(x) == expected


@pytest.mark.parametrize(
    "q, p, expected",
    [(7, 1, 0), (-4, 1, 0), (1, 5, Fraction(1, 5)), (2, 5, 0), (1, 4, Fraction(1, 8)), (-1, 5, Fraction(-1, 5))],
)
def test_examples(q, p, expected):
    assert dedekind_sum(q, p) == expected


def test_domain():
    with pytest.raises(DomainError):
        dedekind_sum(2, 4)
    with pytest.raises(DomainError):
        dedekind_sum(1, 0)
    with pytest.raises(DomainError):
        dedekind_sum(1, -3)


def test_matches_direct_summation():
    for p in range(1, 60):
        for q in range(-p, 2 * p):
            if gcd(q, p) == 1:
                assert dedekind_sum(q, p) == dedekind_sum_direct(q, p)


def test_periodicity_and_oddness():
    rng = random.Random(6)
    done = 0
    while done < 500:
        p = rng.randint(1, 10**4)
        q = rng.randint(-(10**5), 10**5)
        if gcd(q, p) != 1:
            continue
        s = dedekind_sum(q, p)
        assert dedekind_sum(q + p, p) == s
        assert dedekind_sum(-q, p) == -s
        done += 1


def test_reciprocity():
    rng = random.Random(7)
    done = 0
    while done < 300:
        p, q = rng.randint(1, 10**4), rng.randint(1, 10**4)
        if gcd(p, q) != 1:
            continue
        assert dedekind_sum(q, p) + dedekind_sum(p, q) == reciprocity_rhs(q, p)
        done += 1


def test_bound_chain():
    for p in range(1, 121):
        top = s_one_closed_form(p)
        assert dedekind_sum(1, p) == top
        assert top <= Fraction(p, 12)
        for q in range(p):
            if gcd(q, p) == 1:
                assert abs(dedekind_sum(q, p)) <= top


@pytest.mark.parametrize(
    "params, expected",
    [
        (SeifertParams(1, 4, 1, 1, 2), Fraction(1, 8)),
        (SeifertParams(1, 2, 1, -1, -1), Fraction(-2, 5)),
        (SeifertParams(1, 1, 3, -7, 11), Fraction(2, 5)),
        (SeifertParams(1, 1, 1, 1, 6), Fraction(2, 5)),
    ],
)
def test_S(params, expected):
    assert dedekind_S(params) == expected


def test_S_propagates_gcd_error():
    with pytest.raises(DomainError):
        dedekind_S(SeifertParams(1, 4, 1, 2, 1))
