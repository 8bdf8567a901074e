"""Pure-Python/numpy fallback for the hot kernels.

Same contracts as the compiled extension ``_ckernels``; which one is
active is decided once at import in :mod:`token_spectra.kernels`.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .subsets import rank


def token_edge_ranks(n: int, k: int, edges) -> tuple[np.ndarray, np.ndarray]:
    """Edge list of the k-token graph as colex-rank pairs.

    Iterates base edges {x,y} and (k-1)-subsets of the remaining n-2
    vertices, so each token edge is emitted exactly once.  Returned
    arrays are sorted lexicographically with ei < ej entrywise.
    """
    pairs = []
    for x, y in edges:
        others = [w for w in range(1, n + 1) if w != x and w != y]
        for rest in combinations(others, k - 1):
            a = rank(rest + (x,))
            b = rank(rest + (y,))
            pairs.append((a, b) if a < b else (b, a))
    pairs.sort()
    if not pairs:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    arr = np.asarray(pairs, dtype=np.int64)
    return arr[:, 0].copy(), arr[:, 1].copy()


def pqrs_terms(dsum, asum, ei, ej, v) -> tuple[float, float, float, float]:
    """The four Rayleigh components of v on a token graph.

    dsum[r] is the sum of base degrees over the subset of rank r, asum[r]
    twice the number of base edges inside it, (ei, ej) the token edges.
    """
    v = np.asarray(v, dtype=np.float64)
    v2 = v * v
    P = float(np.dot(v2, dsum))
    Q = float(np.dot(v2, asum))
    R = 2.0 * float(np.dot(v[ei], v[ej]))
    S = float(np.dot(v, v))
    return P, Q, R, S
