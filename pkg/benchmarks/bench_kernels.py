"""Compare the dominance-sweep backends.

    python3 benchmarks/bench_kernels.py [--grid 4] [--repeat 5]

Times the least-upper-bound sweep behind ``verify --suite universal`` on
every pair of the two-element weight grid, once per backend, after a warm-up
call (so numba compile time is excluded), and checks the backends agree.
"""

import argparse
import itertools
import time

from beliefcat import kernels
from beliefcat.separable import conjoin_weights
from beliefcat.verify import default_frame, rational_grid, universal_sweep, weight_grid


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--grid", type=int, default=4)
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--python", action="store_true", help="also time the pure-Python sweep")
    args = p.parse_args()

    sample = weight_grid(default_frame(2), rational_grid(args.grid))
    pairs = list(itertools.combinations(sample, 2))
    cands = [conjoin_weights(a, b) for a, b in pairs]
    backends = ["numpy"] + (["numba"] if kernels.HAVE_NUMBA else []) + (["python"] if args.python else [])
    print(f"{len(pairs)} pairs x {len(sample)} sample vectors")

    results = {}
    for backend in backends:
        results[backend] = universal_sweep(pairs, cands, sample, "coproduct", backend)
        best = float("inf")
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            universal_sweep(pairs, cands, sample, "coproduct", backend)
            best = min(best, time.perf_counter() - t0)
        print(f"{backend:>6}: {best * 1e3:9.2f} ms (best of {args.repeat})")
    first = next(iter(results.values()))
    print("backends agree" if all(r == first for r in results.values()) else "BACKENDS DISAGREE")


if __name__ == "__main__":
    main()
