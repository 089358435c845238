"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py --n 3 --r 4

Times (1) every s0 product between compatible basis elements of Xi(n, r),
(2) the same with the graded product, and (3) the associativity scan on
the resulting index array.  Both backends must produce identical results.
"""

import argparse
import time
from collections import defaultdict

from schur0 import _pykernel
from schur0.algebra import build_table
from schur0.core import enumerate_basis

try:
    from schur0 import _ckernel
except ImportError:
    _ckernel = None


def _pairs(n, r):
    flats = [tuple(m) for m in enumerate_basis(n, r)]
    by_ro = defaultdict(list)
    for f in flats:
        by_ro[_pykernel.row_sums(f, n)].append(f)
    return [(a, b) for a in flats for b in by_ro[_pykernel.col_sums(a, n)]]


def _time(fn, repeat):
    best, out = None, None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, out


def run(n, r, repeat):
    pairs = _pairs(n, r)
    arr = build_table(n, r).index_array()
    backends = [("python", _pykernel)] + ([("cython", _ckernel)] if _ckernel else [])
    rows, outputs = [], {}
    for name, mod in backends:
        t_s0, res_s0 = _time(lambda: [mod.s0_product(a, b, n) for a, b in pairs], repeat)
        t_star, res_star = _time(lambda: [mod.star_product(a, b, n) for a, b in pairs], repeat)
        t_assoc, res_assoc = _time(lambda: mod.assoc_violation(arr), repeat)
        outputs[name] = (res_s0, res_star, res_assoc)
        rows.append((name, t_s0, t_star, t_assoc))
    if len(outputs) == 2 and outputs["python"] != outputs["cython"]:
        raise SystemExit("backends disagree")
    print(f"Xi({n},{r}): {len(pairs)} compatible pairs, index array {arr.shape[0]}x{arr.shape[1]}")
    print(f"{'backend':8} {'s0 (s)':>10} {'star (s)':>10} {'assoc (s)':>10}")
    for name, a, b, c in rows:
        print(f"{name:8} {a:10.4f} {b:10.4f} {c:10.4f}")
    if len(rows) == 2:
        (_, pa, pb, pc), (_, ca, cb, cc) = rows
        print(f"{'speedup':8} {pa / ca:9.1f}x {pb / cb:9.1f}x {pc / cc:9.1f}x")
    else:
        print("compiled kernel not built; only the Python backend was timed")
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--r", type=int, default=4)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    run(args.n, args.r, args.repeat)


if __name__ == "__main__":
    main()
