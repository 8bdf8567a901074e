"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python -m token_spectra.bench [--n 14] [--k 4] [--vectors 200]
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from . import _pykernels
from .graphs import cycle

try:
    from . import _ckernels
except ImportError:
    _ckernels = None


def _time(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=14)
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--vectors", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    G = cycle(args.n)
    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("c", _ckernels))
    else:
        print("compiled extension not available; benchmarking fallback only")

    print(f"token edges of F_{args.k}(C_{args.n})")
    results = {}
    for name, mod in backends:
        t, (ei, ej) = _time(lambda m=mod: m.token_edge_ranks(G.n, args.k, G.edges),
                            args.repeat)
        results[name] = (ei, ej)
        print(f"  {name:7s} {t * 1e3:9.2f} ms  ({ei.size} edges)")
    if len(results) == 2:
        pe, ce = results["python"], results["c"]
        assert np.array_equal(pe[0], ce[0]) and np.array_equal(pe[1], ce[1]), \
            "backends disagree on the edge list"

    ei, ej = next(iter(results.values()))
    N = math.comb(args.n, args.k)
    rng = np.random.default_rng(0)
    dsum = rng.random(N)
    asum = rng.random(N)
    vs = rng.standard_normal((args.vectors, N))
    print(f"pqrs_terms over {args.vectors} vectors of length {N}")
    for name, mod in backends:
        def run(m=mod):
            acc = 0.0
            for v in vs:
                acc += m.pqrs_terms(dsum, asum, ei, ej, v)[0]
            return acc
        t, _ = _time(run, args.repeat)
        print(f"  {name:7s} {t * 1e3:9.2f} ms")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
