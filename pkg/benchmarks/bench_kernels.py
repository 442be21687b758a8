"""Time the compiled kernels against the numpy fallback.

Usage: ``python benchmarks/bench_kernels.py [--repeat N] [--out results.csv]``

Shapes follow the training loop: the shift kernel sees one row per evaluation
state, the likelihood kernel one row per (member, sample) pair of a model batch.
"""
import argparse
import csv
import sys
import timeit

import numpy as np

from pdml import _kernels_py
from pdml.nn import LOG_VAR_MAX, LOG_VAR_MIN

try:
    from pdml import _kernels as compiled
except ImportError:
    compiled = None

SHAPES = {"pinsker_shift_rows": [(1000, 1), (1000, 6), (10000, 6)],
          "gaussian_nll": [(7 * 256, 4), (7 * 256, 18), (7 * 2000, 18)]}


def cases(rng):
    for n, d in SHAPES["pinsker_shift_rows"]:
        args = (rng.normal(size=(n, d)), rng.uniform(0.05, 5, (n, d)),
                rng.normal(size=(n, d)), rng.uniform(0.05, 5, (n, d)), False)
        yield "pinsker_shift_rows", n, d, args
    for n, d in SHAPES["gaussian_nll"]:
        args = (rng.normal(size=(n, d)), rng.normal(scale=3, size=(n, d)), rng.normal(size=(n, d)),
                LOG_VAR_MIN, LOG_VAR_MAX)
        yield "gaussian_nll", n, d, args


def best_of(fn, args, repeat):
    timer = timeit.Timer(lambda: fn(*args))
    number, _ = timer.autorange()
    return min(timer.repeat(repeat, number)) / number


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--out", help="optional CSV output path")
    args = p.parse_args(argv)
    if compiled is None:
        print("compiled extension not built; run `pip install --no-build-isolation -e .`", file=sys.stderr)
        return 1
    rows = []
    for name, n, d, fargs in cases(np.random.default_rng(0)):
        py = best_of(getattr(_kernels_py, name), fargs, args.repeat)
        cy = best_of(getattr(compiled, name), fargs, args.repeat)
        rows.append((name, n, d, py * 1e6, cy * 1e6, py / cy))
    print(f"{'kernel':<20}{'rows':>8}{'dim':>5}{'numpy us':>12}{'cython us':>12}{'speedup':>9}")
    for name, n, d, py, cy, sp in rows:
        print(f"{name:<20}{n:>8}{d:>5}{py:>12.1f}{cy:>12.1f}{sp:>8.2f}x")
    if args.out:
        with open(args.out, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["kernel", "rows", "dim", "numpy_us", "cython_us", "speedup"])
            w.writerows(rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
