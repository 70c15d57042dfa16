"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends run on the same inputs; the script checks that they agree and
prints the best wall time of each.
"""
import argparse
import random
import sys
import time

import numpy as np

from heckek import _pykernels
from heckek.elliptic import induction_matrix
from heckek.weyl import build_group

try:
    from heckek import _ckernels
except ImportError:
    _ckernels = None


def best_time(fn, args, repeat):
    best = None
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, out


def snf_cases():
    rng = random.Random(7)
    cases = []
    for size in (10, 20, 40):
        # sparse small entries keep the elimination inside int64
        rows = [[rng.choice((-1, 0, 0, 0, 1)) for _ in range(size)] for _ in range(size)]
        cases.append(("random sparse %dx%d" % (size, size), rows))
    for kind, n in (("B", 4), ("B", 5), ("D", 5)):
        M = induction_matrix(build_group(kind, n))
        cases.append(("induction %s%d (%dx%d)" % (kind, n, M.nrows, M.ncols), M.rows))
    return cases


def compiled_snf(rows):
    try:
        return _ckernels.snf_diagonal(rows), False
    except OverflowError:
        return _pykernels.snf_diagonal(rows), True


def centralizer_cases():
    cases = []
    for kind, n in (("B", 5), ("B", 6), ("D", 6)):
        W = build_group(kind, n)
        images, signs = W.element_arrays()
        w = W.classes()[len(W.classes()) // 2].representative
        args = (images, signs, np.array(w.image, dtype=np.int32), np.array(w.signs, dtype=np.int8))
        cases.append(("centralizer in %s (|W|=%d)" % (W.descriptor(), W.order), args))
    return cases


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    opts = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
        return 1
    print("%-40s %12s %12s %9s" % ("case", "python [s]", "compiled [s]", "speedup"))
    ok = True
    for name, rows in snf_cases():
        tp, a = best_time(_pykernels.snf_diagonal, (rows,), opts.repeat)
        tc, (b, overflow) = best_time(compiled_snf, (rows,), opts.repeat)
        ok &= list(a) == list(b)
        note = "  (int64 overflow, fell back)" if overflow else ""
        print("%-40s %12.4f %12.4f %8.1fx%s" % ("snf " + name, tp, tc, tp / tc, note))
    for name, args in centralizer_cases():
        tp, a = best_time(_pykernels.commuting_indices, args, opts.repeat)
        tc, b = best_time(_ckernels.commuting_indices, args, opts.repeat)
        ok &= list(a) == list(b)
        print("%-40s %12.4f %12.4f %8.1fx" % (name, tp, tc, tp / tc))
    print("backends agree" if ok else "BACKENDS DISAGREE")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
