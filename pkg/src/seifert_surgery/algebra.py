"""
Exact algebra substrate: rationals, Laurent polynomials in one and two
variables, cyclotomic polynomials, resultants and Smith normal form.

Rationals are :class:`fractions.Fraction` throughout; nothing in the package
ever rounds.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DomainError

Rational = Fraction


def format_rational(x):
    """Serialize a rational as a bit-exact ``"num/den"`` string."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text):
    """Inverse of :func:`format_rational`; also accepts plain integers."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    text = str(text).strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not an exact rational: {text!r}") from exc


def _clean(items):
    return {e: c for e, c in items if c != 0}


class LaurentPoly1:
    """Integer Laurent polynomial in one variable, stored as {exponent: coeff}.

    Instances are immutable and never store zero coefficients.

    >>> f = LaurentPoly1.from_list([1, -3, 1])
    >>> f
    LaurentPoly1('t^2 - 3*t + 1')
    >>> f(2)
    -1
    """

    __slots__ = ("_c", "var")

    def __init__(self, coeffs=None, var="t"):
        items = dict(coeffs or {}).items()
        for e, c in items:
            if int(e) != e or int(c) != c:
                raise DomainError("exponents and coefficients must be integers")
        self._c = _clean((int(e), int(c)) for e, c in items)
        self.var = var

    @classmethod
    def from_list(cls, coeffs, offset=0, var="t"):
        """Coefficients in ascending order, the first one sitting at t^offset."""
        return cls({offset + i: c for i, c in enumerate(coeffs)}, var)

    @classmethod
    def monomial(cls, coeff=1, exponent=1, var="t"):
        return cls({exponent: coeff}, var)

    @property
    def coeffs(self):
        return dict(self._c)

    def is_zero(self):
        return not self._c

    @property
    def degree(self):
        if not self._c:
            raise DomainError("degree of the zero polynomial")
        return max(self._c)

    @property
    def valuation(self):
        if not self._c:
            raise DomainError("valuation of the zero polynomial")
        return min(self._c)

    @property
    def leading_coefficient(self):
        return self._c[self.degree]

    def is_ordinary(self):
        return not self._c or self.valuation >= 0

    def shift(self, k):
        """Multiply by t^k."""
        return LaurentPoly1({e + k: c for e, c in self._c.items()}, self.var)

    def normalized(self):
        """The ordinary polynomial t^k * f with nonzero constant term."""
        if not self._c:
            return self
        return self.shift(-self.valuation)

    def dense(self):
        """Ascending coefficient list of an ordinary polynomial, index = exponent."""
        if not self._c:
            return []
        if self.valuation < 0:
            raise DomainError("dense() needs an ordinary polynomial")
        out = [0] * (self.degree + 1)
        for e, c in self._c.items():
            out[e] = c
        return out

    def __call__(self, x):
        total = 0
        for e, c in self._c.items():
            total += c * x**e
        return total

    def _coerce(self, other):
        if isinstance(other, LaurentPoly1):
            return other
        if isinstance(other, int):
            return LaurentPoly1({0: other}, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly1(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly1({e: -c for e, c in self._c.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly1(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise DomainError("only nonnegative integer powers")
        result = LaurentPoly1({0: 1}, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly1({0: other})
        if not isinstance(other, LaurentPoly1):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            c = self._c[e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = self.var if e == 1 else f"{self.var}^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"LaurentPoly1({str(self)!r})"

    def to_json(self):
        return {str(e): c for e, c in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data, var="t"):
        return cls({int(e): int(c) for e, c in data.items()}, var)


class LaurentPoly2:
    """Integer Laurent polynomial in two variables, {(i, j): coeff}."""

    __slots__ = ("_c", "vars")

    def __init__(self, coeffs=None, vars=("t1", "t2")):
        self._c = _clean(((int(i), int(j)), int(c)) for (i, j), c in dict(coeffs or {}).items())
        self.vars = tuple(vars)

    @classmethod
    def gens(cls):
        return cls({(1, 0): 1}), cls({(0, 1): 1})

    @property
    def coeffs(self):
        return dict(self._c)

    def is_zero(self):
        return not self._c

    def _coerce(self, other):
        if isinstance(other, LaurentPoly2):
            return other
        if isinstance(other, int):
            return LaurentPoly2({(0, 0): other}, self.vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for k, c in other._c.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly2(out, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2({k: -c for k, c in self._c.items()}, self.vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for (i1, j1), c1 in self._c.items():
            for (i2, j2), c2 in other._c.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly2(out, self.vars)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __call__(self, x, y):
        total = 0
        for (i, j), c in self._c.items():
            total += c * x**i * y**j
        return total

    def diagonal(self, var="t"):
        """Specialize t1 = t2 = t."""
        out = {}
        for (i, j), c in self._c.items():
            out[i + j] = out.get(i + j, 0) + c
        return LaurentPoly1(out, var)

    def __repr__(self):
        terms = " + ".join(f"{c}*{self.vars[0]}^{i}*{self.vars[1]}^{j}" for (i, j), c in sorted(self._c.items()))
        return f"LaurentPoly2({terms or '0'!r})"

    def to_json(self):
        return [[i, j, c] for (i, j), c in sorted(self._c.items())]


def _divide_exact(num, den):
    # ascending dense lists, den monic up to sign; returns quotient
    num = list(num)
    dl = len(den) - 1
    lead = den[-1]
    quot = [0] * (len(num) - dl)
    for k in range(len(quot) - 1, -1, -1):
        c, r = divmod(num[k + dl], lead)
        if r:
            raise DomainError("inexact polynomial division")
        quot[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num[:dl]):
        raise DomainError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def _cyclotomic_dense(d):
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            num = _divide_exact(num, _cyclotomic_dense(e))
    return tuple(num)


def cyclotomic_poly(d, var="t"):
    """The d-th cyclotomic polynomial, as t^d - 1 divided by every proper Phi_e."""
    if not isinstance(d, int) or d < 1:
        raise DomainError("cyclotomic_poly needs d >= 1")
    return LaurentPoly1.from_list(_cyclotomic_dense(d), var=var)


def bareiss_det(rows):
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def sylvester_matrix(f, g):
    fd = f.dense()[::-1]
    gd = g.dense()[::-1]
    m, n = len(fd) - 1, len(gd) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return rows


def resultant(f, g):
    """Res(f, g) = lc(f)^deg(g) * prod of g over the roots of f, computed exactly.

    >>> resultant(LaurentPoly1.from_list([-1, 1]), LaurentPoly1.from_list([1, 1]))
    2
    """
    if f.is_zero() or g.is_zero():
        raise DomainError("resultant of the zero polynomial")
    if not (f.is_ordinary() and g.is_ordinary()):
        raise DomainError("resultant needs ordinary polynomials; normalize first")
    return bareiss_det(sylvester_matrix(f, g))


def smith_normal_form(matrix):
    """Invariant factors d1 | d2 | ... of an integer matrix (0 marks a free summand).

    Pivots on the entry of smallest absolute value in the remaining block.
    """
    a = [[int(x) for x in row] for row in matrix]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    if any(len(row) != ncols for row in a):
        raise DomainError("ragged matrix")
    diag = []
    t = 0
    while t < min(nrows, ncols):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if a[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, nrows):
                if a[i][t]:
                    c = a[i][t] // p
                    a[i] = [x - c * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, ncols):
                if a[t][j]:
                    c = a[t][j] // p
                    for row in a:
                        row[j] -= c * row[t]
                    if a[t][j]:
                        done = False
            if not done:
                # a remainder is smaller than the pivot: move it into place
                _, pi, pj = min(
                    [(abs(a[i][t]), i, t) for i in range(t, nrows) if a[i][t]]
                    + [(abs(a[t][j]), t, j) for j in range(t, ncols) if a[t][j]]
                )
                a[t], a[pi] = a[pi], a[t]
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
                continue
            bad = next(
                (i for i in range(t + 1, nrows) for j in range(t + 1, ncols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        diag.append(abs(a[t][t]))
        t += 1
    diag += [0] * (min(nrows, ncols) - len(diag))
    return diag
