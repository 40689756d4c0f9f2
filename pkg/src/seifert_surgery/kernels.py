"""Backend selection for the inner loops.

The compiled ``_speedups`` module is used when it was built and
``SEIFERT_SURGERY_PURE_PYTHON`` is unset; otherwise ``_purepy``. Arguments
too large for 64-bit machine arithmetic always take the pure-Python path.
"""

import os

from . import _purepy

try:
    if os.environ.get("SEIFERT_SURGERY_PURE_PYTHON"):
        raise ImportError
    from . import _speedups
except ImportError:
    _speedups = None

BACKEND = "cython" if _speedups is not None else "python"

# p^3 < 2^63 and 10*a*b*max(a, b) < 2^63 keep the compiled loops exact
_DEDEKIND_LIMIT = 1 << 20
_SCAN_LIMIT = 1 << 18


def dedekind_numerator(q, p):
    if _speedups is not None and p < _DEDEKIND_LIMIT and abs(q) < (1 << 62):
        return _speedups.dedekind_numerator(q, p)
    return _purepy.dedekind_numerator(q, p)


def class_scan(alpha, beta, sign):
    if _speedups is not None and max(alpha, beta) < _SCAN_LIMIT:
        return _speedups.class_scan(alpha, beta, sign)
    return _purepy.class_scan(alpha, beta, sign)
