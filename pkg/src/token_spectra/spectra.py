"""Laplacians, dense symmetric eigendecomposition, Rayleigh quotients."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .graphs import Graph

SPECTRAL_TOL = 1e-8
DENSE_SOLVE_CAP = 3000


class EigenError(RuntimeError):
    """The eigensolver produced a decomposition outside tolerance."""


@dataclass(frozen=True)
class SymMatrix:
    """Real symmetric matrix (dense)."""

    array: np.ndarray

    def __post_init__(self):
        a = self.array
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        if not np.array_equal(a, a.T):
            raise ValueError("matrix is not symmetric")

    @property
    def order(self) -> int:
        return self.array.shape[0]


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues with an orthonormal eigenvector basis."""

    values: np.ndarray      # shape (N,), ascending
    vectors: np.ndarray     # shape (N, N), columns aligned with values
    residual: float         # max-norm of M v - lambda v over all pairs


def laplacian(G: Graph) -> SymMatrix:
    """L = D - A."""
    L = np.zeros((G.n, G.n))
    for u, v in G.edges:
        L[u - 1, v - 1] = -1.0
        L[v - 1, u - 1] = -1.0
        L[u - 1, u - 1] += 1.0
        L[v - 1, v - 1] += 1.0
    return SymMatrix(L)


def _canonical_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip each column so its first entry of nontrivial magnitude is
    positive (deterministic output in degenerate eigenspaces)."""
    out = vectors.copy()
    for j in range(out.shape[1]):
        col = out[:, j]
        nz = np.nonzero(np.abs(col) > 1e-12)[0]
        if nz.size and col[nz[0]] < 0:
            out[:, j] = -col
    return out


def eigen_sym(M: SymMatrix) -> Spectrum:
    """Full decomposition of a symmetric matrix, ascending eigenvalues."""
    if M.order > DENSE_SOLVE_CAP:
        raise EigenError(
            f"dense eigensolve refused for order {M.order} > {DENSE_SOLVE_CAP}"
        )
    values, vectors = np.linalg.eigh(M.array)
    vectors = _canonical_signs(vectors)
    scale = max(1.0, float(abs(values[-1])))
    residual = float(np.max(np.abs(M.array @ vectors - vectors * values)))
    if residual > SPECTRAL_TOL * scale:
        raise EigenError(f"eigendecomposition residual {residual:.3e} above tolerance")
    ortho = float(np.max(np.abs(vectors.T @ vectors - np.eye(M.order))))
    if ortho > SPECTRAL_TOL:
        raise EigenError(f"eigenvector basis not orthonormal: defect {ortho:.3e}")
    return Spectrum(values=values, vectors=vectors, residual=residual)


@lru_cache(maxsize=None)
def graph_spectrum(G: Graph) -> Spectrum:
    """Cached Laplacian spectrum of G."""
    return eigen_sym(laplacian(G))


def algebraic_connectivity(G: Graph) -> float:
    """Second-smallest Laplacian eigenvalue; 0 iff G is disconnected."""
    if G.n < 2:
        raise ValueError("algebraic connectivity needs at least 2 vertices")
    return float(graph_spectrum(G).values[1])


def rayleigh_quotient(G: Graph, v: Sequence[float]) -> float:
    """Edge-sum Rayleigh quotient: sum over edges of (v_x - v_y)^2
    divided by |v|^2."""
    v = np.asarray(v, dtype=np.float64)
    if v.shape != (G.n,):
        raise ValueError(f"vector length {v.shape} does not match n={G.n}")
    denom = float(np.dot(v, v))
    if denom == 0.0:
        raise ValueError("Rayleigh quotient of the zero vector")
    num = sum((v[u - 1] - v[w - 1]) ** 2 for u, w in G.edges)
    return float(num) / denom


def is_embedding(v: Sequence[float], tol: float = SPECTRAL_TOL) -> bool:
    """True iff v is (numerically) orthogonal to the all-ones vector."""
    v = np.asarray(v, dtype=np.float64)
    return abs(float(v.sum())) <= tol * float(np.linalg.norm(v))
