# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the loops in ``_purepy``; same signatures and results.

Arguments are bounded by the dispatcher in ``kernels`` so that every
intermediate fits in a signed 64-bit integer.
"""


cdef long long _gcd(long long a, long long b):
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


def dedekind_numerator(long long q, long long p):
    cdef long long step = q % p
    cdef long long r = 0
    cdef long long total = 0
    cdef long long k
    if step < 0:
        step += p
    for k in range(1, p):
        r += step
        if r >= p:
            r -= p
        if r:
            total += (2 * k - p) * (2 * r - p)
    return total


def class_scan(long long alpha, long long beta, long long sign):
    cdef long long m = 2 * alpha * beta
    cdef long long r1, r2, base, t, q3
    out = []
    for r1 in range(1, 2 * alpha, 2):
        if _gcd(r1, alpha) != 1:
            continue
        base = sign - 5 * beta * r1
        for r2 in range(1, 2 * beta, 2):
            if _gcd(r2, beta) != 1:
                continue
            t = base - 5 * alpha * r2
            if t % m == 0:
                q3 = t // m
                if q3 % 5 != 0:
                    out.append((r1, r2, q3))
    return out
