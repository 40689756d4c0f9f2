"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit
from math import gcd

from seifert_surgery import _purepy

try:
    from seifert_surgery import _speedups
except ImportError:
    _speedups = None


def _dedekind_workload(n=200, seed=0):
    rng = random.Random(seed)
    pairs = []
    while len(pairs) < n:
        p, q = rng.randint(1, 10**4), rng.randint(1, 10**4)
        if gcd(p, q) == 1:
            pairs.append((q, p))
    return pairs


def _scan_workload(max_beta=50):
    return [(a, b, s) for b in range(1, max_beta + 1) for a in range(1, b) if gcd(a, b) == 1 for s in (1, -1)]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    pairs, scans = _dedekind_workload(), _scan_workload()
    backends = {"python": _purepy}
    if _speedups is not None:
        backends["cython"] = _speedups
    else:
        print("compiled extension not built; timing the fallback only")

    results = {}
    for name, mod in backends.items():
        ded = min(timeit.repeat(lambda: [mod.dedekind_numerator(q, p) for q, p in pairs], number=1, repeat=args.repeat))
        scan = min(timeit.repeat(lambda: [mod.class_scan(*s) for s in scans], number=1, repeat=args.repeat))
        results[name] = (ded, scan)
        print(f"{name:>7}  dedekind_numerator x{len(pairs)}: {ded * 1e3:9.2f} ms   class_scan x{len(scans)}: {scan * 1e3:9.2f} ms")

    if "cython" in results:
        (pd, ps), (cd, cs) = results["python"], results["cython"]
        print(f"speedup  dedekind_numerator: {pd / cd:6.1f}x   class_scan: {ps / cs:6.1f}x")
        assert [_purepy.dedekind_numerator(q, p) for q, p in pairs] == [_speedups.dedekind_numerator(q, p) for q, p in pairs]
        assert [list(_purepy.class_scan(*s)) for s in scans] == [list(_speedups.class_scan(*s)) for s in scans]


if __name__ == "__main__":
    main()
