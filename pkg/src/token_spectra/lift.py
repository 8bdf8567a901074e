"""Binomial-matrix lifts and multiset spectral inclusion.

The (n,k) binomial matrix B has rows indexed by k-subsets (colex rank)
and columns by vertices, with a 1 where the vertex lies in the subset.
B is never materialized: products stream over the subset index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .spectra import Spectrum, graph_spectrum
from .subsets import KSubsetIndex
from .tokens import TokenGraph

MATCH_TOL = 1e-7


class InclusionViolation(RuntimeError):
    """Spectral inclusion failed; this would contradict the underlying
    theory and is treated as a hard error."""


@dataclass(frozen=True)
class BinomialMatrix:
    n: int
    k: int

    @cached_property
    def index(self) -> KSubsetIndex:
        return KSubsetIndex(self.n, self.k)

    @cached_property
    def _members(self) -> np.ndarray:
        """(size, k) array: row r holds the 0-based vertices of subset r."""
        out = np.empty((self.index.size, self.k), dtype=np.int64)
        for r, X in enumerate(self.index.subsets()):
            out[r] = [x - 1 for x in X]
        return out


def project(B: BinomialMatrix, v: Sequence[float]) -> np.ndarray:
    """B^T v: entry x is the sum of v over all subsets containing x."""
    v = np.asarray(v, dtype=np.float64)
    if v.shape != (B.index.size,):
        raise ValueError(f"vector length {v.shape} != C({B.n},{B.k}) = {B.index.size}")
    out = np.zeros(B.n)
    np.add.at(out, B._members.ravel(), np.repeat(v, B.k))
    return out


@lru_cache(maxsize=None)
def _child_ranks(n: int, k: int) -> np.ndarray:
    """(C(n,k), k) array: row r holds the level-(k-1) ranks of the
    (k-1)-subsets of the rank-r subset."""
    big = KSubsetIndex(n, k)
    small = KSubsetIndex(n, k - 1)
    out = np.empty((big.size, k), dtype=np.int64)
    for r, X in enumerate(big.subsets()):
        out[r] = [small.rank(X[:i] + X[i + 1 :]) for i in range(k)]
    return out


def project_to_previous(v: Sequence[float], n: int, k: int) -> np.ndarray:
    """Level-down subset sums: entry at a (k-1)-subset Z is the sum of v
    over all k-subsets containing Z."""
    if k < 2:
        raise ValueError("project_to_previous needs k >= 2")
    v = np.asarray(v, dtype=np.float64)
    children = _child_ranks(n, k)
    if v.shape != (children.shape[0],):
        raise ValueError(f"vector length {v.shape} != C({n},{k})")
    out = np.zeros(KSubsetIndex(n, k - 1).size)
    np.add.at(out, children.ravel(), np.repeat(v, k))
    return out


def restrict(v: Sequence[float], S_U: Sequence[int]) -> np.ndarray:
    """Entries of v at the given ranks, in rank order (the vertex order of
    the induced subgraph on those ranks)."""
    v = np.asarray(v, dtype=np.float64)
    return v[np.asarray(S_U, dtype=np.int64)]


@dataclass
class SpectralMatch:
    """Result of multiset-matching a smaller spectrum into a larger one."""

    ok: bool
    pairs: list[tuple[int, int]]
    max_gap: float
    unmatched: list[int] = field(default_factory=list)
    failed_at: float | None = None


def _values(spec) -> np.ndarray:
    if isinstance(spec, Spectrum):
        return spec.values
    return np.asarray(spec, dtype=np.float64)


def spectral_inclusion_check(small, large, tol: float = MATCH_TOL) -> SpectralMatch:
    """Greedy two-pointer multiset matching of two ascending spectra.

    Succeeds iff every entry of `small` pairs with a distinct entry of
    `large` within tol; leftover `large` indices are the "new" ones.
    """
    a = _values(small)
    b = _values(large)
    if a.size > b.size:
        raise ValueError(f"small spectrum larger than large one ({a.size} > {b.size})")
    pairs: list[tuple[int, int]] = []
    unmatched: list[int] = []
    max_gap = 0.0
    j = 0
    for i in range(a.size):
        while j < b.size and b[j] < a[i] - tol:
            unmatched.append(j)
            j += 1
        if j >= b.size or abs(b[j] - a[i]) > tol:
            return SpectralMatch(ok=False, pairs=pairs, max_gap=max_gap,
                                 unmatched=unmatched, failed_at=float(a[i]))
        pairs.append((i, j))
        max_gap = max(max_gap, abs(float(b[j] - a[i])))
        j += 1
    unmatched.extend(range(j, b.size))
    return SpectralMatch(ok=True, pairs=pairs, max_gap=max_gap, unmatched=unmatched)


@dataclass
class EigenClassification:
    """Eigenvalues of a token graph split into inherited vs new, with a
    representative eigenvector (orthogonal to the lifted eigenspace, so
    B^T v ~ 0) for each new eigenvalue."""

    inherited: list[tuple[float, int]]          # (eigenvalue, column index)
    new: list[tuple[float, np.ndarray]]         # (eigenvalue, representative)
    match: SpectralMatch


def _clusters(values: np.ndarray, tol: float) -> list[list[int]]:
    groups: list[list[int]] = []
    for i, v in enumerate(values):
        if groups and v - values[groups[-1][-1]] <= tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def classify_eigenvalues(T: TokenGraph, tol: float = MATCH_TOL,
                         against: str = "base") -> EigenClassification:
    """Partition the spectrum of the token graph into inherited vs new.

    against="base" compares with the base graph and picks, inside each
    (nearly) degenerate eigenspace, representatives from the nullspace of
    B^T (numerical eigensolvers return arbitrary bases there).

    against="previous" compares with the token graph one level down and
    picks representatives annihilated by the level-down subset sums; such
    vectors are automatically annihilated by every lower level too, so
    their restrictions to the subsets containing any U with |U| <= k-1
    are embeddings.  (With "base", that only holds for |U| <= 1.)
    """
    from .tokens import token_graph as _token_graph

    tok_spec = graph_spectrum(T.graph)
    if against == "base":
        ref_spec = graph_spectrum(T.base)
    elif against == "previous":
        if T.k < 2:
            raise ValueError('against="previous" needs k >= 2')
        ref_spec = graph_spectrum(_token_graph(T.base, T.k - 1).graph)
    else:
        raise ValueError(f"against must be 'base' or 'previous', got {against!r}")
    match = spectral_inclusion_check(ref_spec, tok_spec, tol)
    if not match.ok:
        raise InclusionViolation(
            f"reference spectrum does not embed in the token spectrum: "
            f"failed at eigenvalue {match.failed_at!r} (tol={tol})"
        )
    matched_cols = {j for _, j in match.pairs}
    B = BinomialMatrix(T.base.n, T.k)

    def down(col: np.ndarray) -> np.ndarray:
        if against == "base":
            return project(B, col)
        return project_to_previous(col, T.base.n, T.k)

    inherited = [(float(tok_spec.values[j]), j) for j in sorted(matched_cols)]
    new: list[tuple[float, np.ndarray]] = []
    for cluster in _clusters(tok_spec.values, tol):
        n_new = sum(1 for j in cluster if j not in matched_cols)
        if n_new == 0:
            continue
        V = tok_spec.vectors[:, cluster]
        M = np.column_stack([down(V[:, c]) for c in range(V.shape[1])])
        # Right singular directions with the smallest singular values span
        # the B^T-nullspace of the eigenspace.
        _, _, vt = np.linalg.svd(M)
        reps = V @ vt[len(cluster) - n_new :].T
        new_vals = [float(tok_spec.values[j]) for j in cluster if j not in matched_cols]
        for c in range(n_new):
            w = reps[:, c]
            w = w / np.linalg.norm(w)
            new.append((new_vals[c], w))
    new.sort(key=lambda t: t[0])
    return EigenClassification(inherited=inherited, new=new, match=match)
