"""Pure-Python versions of the inner loops compiled in ``_speedups.pyx``."""

from math import gcd


def dedekind_numerator(q, p):
    """Integer N with s(q, p) = N / (4 p^2).

    For 0 < k < p the sawtooth ((k/p)) is (2k - p) / (2p); terms with
    kq = 0 (mod p) vanish.
    """
    step = q % p
    r = 0
    total = 0
    for k in range(1, p):
        r += step
        if r >= p:
            r -= p
        if r:
            total += (2 * k - p) * (2 * r - p)
    return total


def class_scan(alpha, beta, sign):
    """Residue classes (q1 mod 2a, q2 mod 2b) with q1, q2 odd solving
    5b*q1 + 5a*q2 + 2ab*q3 = sign; yields (q1, q2, q3) with the exact q3."""
    out = []
    m = 2 * alpha * beta
    for r1 in range(1, 2 * alpha, 2):
        if gcd(r1, alpha) != 1:
            continue
        base = sign - 5 * beta * r1
        for r2 in range(1, 2 * beta, 2):
            if gcd(r2, beta) != 1:
                continue
            t = base - 5 * alpha * r2
            if t % m == 0:
                q3 = t // m
                if q3 % 5:
                    out.append((r1, r2, q3))
    return out
