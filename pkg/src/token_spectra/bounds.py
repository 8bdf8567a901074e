"""Executable forms of the spectral bounds on token graphs.

Every check returns a :class:`BoundRecord` with a three-state outcome:
``pass`` (hypothesis held, inequality satisfied), ``vacuous`` (hypothesis
failed, nothing asserted), or ``FAIL``.  Vacuous is never conflated with
pass: several of the checked statements have hypotheses that provably
never hold (the algebraic connectivity of a token graph always equals
that of the base graph), and the reports say so explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import kernels
from .graphs import Graph, delete_vertices, is_connected, max_degree, min_degree
from .lift import MATCH_TOL, classify_eigenvalues, spectral_inclusion_check
from .spectra import algebraic_connectivity, graph_spectrum, rayleigh_quotient
from .subsets import KSubsetIndex
from .tokens import DEFAULT_VERTEX_CAP, TokenGraph, token_graph

MARGIN_TOL = 1e-6   # bound margins (differences of computed quantities)
EQ_TOL = 1e-7       # asserted spectral equalities
IDENT_TOL = 1e-9    # algebraic identities, relative

PASS, VACUOUS, FAIL = "pass", "vacuous", "FAIL"


@dataclass(frozen=True)
class PQRS:
    """Rayleigh components of a vector on a token graph:
    (P - Q - R) / S is the Rayleigh quotient."""

    P: float
    Q: float
    R: float
    S: float

    @property
    def quotient(self) -> float:
        return (self.P - self.Q - self.R) / self.S


@dataclass
class BoundRecord:
    check: str
    status: str                 # pass | vacuous | FAIL
    lhs: float | None = None
    rhs: float | None = None
    margin: float | None = None
    detail: str = ""


@dataclass
class BoundReport:
    """All check records for one (graph, k) instance."""

    graph: str
    k: int
    alpha_base: float
    alpha_token: float | None
    new_eigenvalues: list[float]
    records: list[BoundRecord] = field(default_factory=list)


def _record(check: str, lhs: float, rhs: float, tol: float, detail: str = "") -> BoundRecord:
    margin = lhs - rhs
    status = PASS if margin >= -tol else FAIL
    return BoundRecord(check, status, float(lhs), float(rhs), float(margin), detail)


def _vacuous(check: str, detail: str) -> BoundRecord:
    return BoundRecord(check, VACUOUS, detail=detail)


# ---------------------------------------------------------------------------
# PQRS machinery


def pqrs(G: Graph, k: int, v: Sequence[float], cap: int = DEFAULT_VERTEX_CAP) -> PQRS:
    """The four Rayleigh components of v over the k-token graph of G."""
    T = token_graph(G, k, cap)
    v = np.asarray(v, dtype=np.float64)
    if v.shape != (T.index.size,):
        raise ValueError(f"vector length {v.shape} != C({G.n},{k}) = {T.index.size}")
    if not np.any(v):
        raise ValueError("PQRS of the zero vector (S = 0)")
    ei, ej = T.edge_ranks
    P, Q, R, S = kernels.pqrs_terms(T.degree_sums, T.internal_edge_counts, ei, ej, v)
    return PQRS(P, Q, R, S)


def pqrs_batch(G: Graph, k: int, V: np.ndarray, cap: int = DEFAULT_VERTEX_CAP) -> np.ndarray:
    """Columns of V are vectors; returns a (4, ncols) array of P,Q,R,S."""
    T = token_graph(G, k, cap)
    V = np.asarray(V, dtype=np.float64)
    ei, ej = T.edge_ranks
    V2 = V * V
    P = T.degree_sums @ V2
    Q = T.internal_edge_counts @ V2
    R = 2.0 * np.einsum("ij,ij->j", V[ei], V[ej])
    S = np.einsum("ij,ij->j", V, V)
    return np.vstack([P, Q, R, S])


@lru_cache(maxsize=None)
def _vz_map(n: int, k: int, z: int) -> np.ndarray:
    """For each (k-1)-subset rank: the rank of the subset plus z, or -1 if
    the subset already contains z."""
    small = KSubsetIndex(n, k - 1)
    big = KSubsetIndex(n, k)
    out = np.empty(small.size, dtype=np.int64)
    for r, Z in enumerate(small.subsets()):
        out[r] = -1 if z in Z else big.rank(sorted(Z + (z,)))
    return out


def vz_star(n: int, k: int, v: Sequence[float], z: int) -> np.ndarray:
    """Token vector one level down: entry at Z is v(Z + z) when z is not
    in Z, and 0 otherwise."""
    if k < 2:
        raise ValueError("vz_star needs k >= 2")
    if not 1 <= z <= n:
        raise ValueError(f"vertex z={z} out of range [1, {n}]")
    v = np.asarray(v, dtype=np.float64)
    m = _vz_map(n, k, z)
    out = np.where(m >= 0, v[np.clip(m, 0, None)], 0.0)
    return out


def check_pqrs_recursion(G: Graph, k: int, v: Sequence[float],
                         tol: float = IDENT_TOL) -> BoundRecord:
    """Level-(k-1) recursions for P, Q, R, S (Q only applies for k > 2)."""
    if k < 2:
        return _vacuous("pqrs_recursion", "needs k >= 2")
    top = pqrs(G, k, v)
    sums = np.zeros(4)
    for z in range(1, G.n + 1):
        w = vz_star(G.n, k, v, z)
        if np.any(w):
            low = pqrs(G, k - 1, w)
            sums += [low.P, low.Q, low.R, low.S]
    checks = {
        "P": (top.P, sums[0] / (k - 1)),
        "R": (top.R, sums[2] / (k - 1)),
        "S": (top.S, sums[3] / k),
    }
    if k > 2:
        checks["Q"] = (top.Q, sums[1] / (k - 2))
    worst = 0.0
    details = []
    for name, (lhs, rhs) in checks.items():
        resid = abs(lhs - rhs) / max(1.0, abs(lhs))
        worst = max(worst, resid)
        details.append(f"{name}={resid:.2e}")
    status = PASS if worst <= tol else FAIL
    return BoundRecord("pqrs_recursion", status, worst, tol, tol - worst,
                       "relative residuals " + " ".join(details))


def check_pqrs_identity(G: Graph, k: int, v: Sequence[float],
                        tol: float = IDENT_TOL) -> BoundRecord:
    """(P - Q - R)/S must equal the matrix-form Rayleigh quotient."""
    q1 = pqrs(G, k, v).quotient
    q2 = rayleigh_quotient(token_graph(G, k).graph, v)
    resid = abs(q1 - q2) / max(1.0, abs(q2))
    status = PASS if resid <= tol else FAIL
    return BoundRecord("pqrs_identity", status, q1, q2, tol - resid,
                       f"relative residual {resid:.2e}")


def check_qs_bound(G: Graph, k: int, v: Sequence[float],
                   tol: float = IDENT_TOL) -> BoundRecord:
    """Q <= k * min(k-1, max degree) * S for any vector."""
    p = pqrs(G, k, v)
    rhs = k * min(k - 1, max_degree(G)) * p.S
    return _record("qs_bound", rhs, p.Q, tol * max(1.0, abs(rhs)),
                   detail="bound minus Q")


# ---------------------------------------------------------------------------
# Eigenvalue classification helpers


def token_alpha(G: Graph, k: int, cap: int = DEFAULT_VERTEX_CAP) -> float:
    return algebraic_connectivity(token_graph(G, k, cap).graph)


def new_eigenvalues_vs_base(G: Graph, k: int, tol: float = MATCH_TOL,
                            cap: int = DEFAULT_VERTEX_CAP) -> list[float]:
    """Multiset difference spec(F_k) minus spec(G)."""
    cls = classify_eigenvalues(token_graph(G, k, cap), tol)
    return [val for val, _ in cls.new]


def new_eigenvalues_vs_previous(G: Graph, k: int, tol: float = MATCH_TOL,
                                cap: int = DEFAULT_VERTEX_CAP) -> list[float]:
    """Multiset difference spec(F_k) minus spec(F_{k-1}); needs k >= 2."""
    if k < 2:
        raise ValueError("needs k >= 2")
    prev = graph_spectrum(token_graph(G, k - 1, cap).graph)
    cur = graph_spectrum(token_graph(G, k, cap).graph)
    match = spectral_inclusion_check(prev, cur, tol)
    if not match.ok:
        raise RuntimeError(
            f"spectral inclusion F_{k-1} into F_{k} failed at {match.failed_at!r}"
        )
    return [float(cur.values[j]) for j in match.unmatched]


# ---------------------------------------------------------------------------
# Theorem checks


def check_new_eigenvalue_bound(G: Graph, k: int, tol: float = MARGIN_TOL,
                               cap: int = DEFAULT_VERTEX_CAP) -> BoundRecord:
    """Every eigenvalue of F_k not inherited from G is at least
    k*(alpha(G) - k + 1)."""
    alpha = algebraic_connectivity(G)
    bound = k * (alpha - k + 1)
    new = new_eigenvalues_vs_base(G, k, cap=cap)
    if not new:
        return _vacuous("new_eigenvalue_bound", "no new eigenvalues")
    return _record("new_eigenvalue_bound", min(new), bound, tol,
                   detail=f"{len(new)} new eigenvalues; min margin")


def conditional_alpha_record(alphas: Sequence[float], tol: float = MARGIN_TOL,
                             strict_tol: float = EQ_TOL) -> BoundRecord:
    """Predicate core of the strict-chain conditional bound.

    alphas = [alpha(G), alpha(F_2), ..., alpha(F_k)].  The hypothesis is a
    strictly decreasing chain; it provably never holds on real graphs
    (token algebraic connectivity equals the base one), so on real inputs
    this records vacuous.
    """
    k = len(alphas)
    if k < 2:
        return _vacuous("conditional_alpha_bound", "needs k >= 2")
    strict = all(alphas[i] - alphas[i + 1] > strict_tol for i in range(k - 1))
    if not strict:
        return _vacuous("conditional_alpha_bound",
                        "strict chain hypothesis fails (alpha values equal)")
    bound = k * (alphas[0] - k + 1)
    return _record("conditional_alpha_bound", alphas[-1], bound, tol)


def check_conditional_alpha_bound(G: Graph, k: int, tol: float = MARGIN_TOL,
                                  cap: int = DEFAULT_VERTEX_CAP) -> BoundRecord:
    alphas = [algebraic_connectivity(G)]
    alphas += [token_alpha(G, h, cap) for h in range(2, k + 1)]
    return conditional_alpha_record(alphas, tol)


def check_alpha_equality_oracle(G: Graph, k: int, tol: float = EQ_TOL,
                                cap: int = DEFAULT_VERTEX_CAP) -> BoundRecord:
    """Token algebraic connectivity equals the base one (proven fact,
    used here as an oracle); only asserted for connected G."""
    if not is_connected(G):
        return _vacuous("alpha_equality_oracle", "oracle requires connected G")
    a_base = algebraic_connectivity(G)
    a_tok = token_alpha(G, k, cap)
    rec = BoundRecord("alpha_equality_oracle",
                      PASS if abs(a_tok - a_base) <= tol else FAIL,
                      a_tok, a_base, -abs(a_tok - a_base))
    return rec


def _equality_over_h(check: str, G: Graph, k: int, tol: float, cap: int,
                     detail: str) -> BoundRecord:
    """Assert alpha(F_h) = alpha(G) for all feasible h <= k."""
    alpha = algebraic_connectivity(G)
    worst = 0.0
    tested = []
    for h in range(1, k + 1):
        if math.comb(G.n, h) > cap:
            continue
        worst = max(worst, abs(token_alpha(G, h, cap) - alpha))
        tested.append(h)
    if not tested:
        return _vacuous(check, "no h under the vertex cap")
    rec = BoundRecord(check, PASS if worst <= tol else FAIL,
                      -worst, 0.0, -worst,
                      f"{detail}; h tested: {tested}")
    return rec


def check_corollary_alpha_geq_k(G: Graph, k: int, tol: float = EQ_TOL,
                                cap: int = DEFAULT_VERTEX_CAP) -> BoundRecord:
    """If alpha(G) >= k then alpha(F_h) = alpha(G) for all h <= k."""
    alpha = algebraic_connectivity(G)
    if alpha < k - tol:
        return _vacuous("corollary_alpha_geq_k",
                        f"hypothesis alpha(G) = {alpha:.6g} >= k = {k} fails")
    return _equality_over_h("corollary_alpha_geq_k", G, k, tol, cap,
                            f"alpha(G) = {alpha:.6g} >= k = {k}")


def check_min_degree_condition(G: Graph, k: int, tol: float = EQ_TOL,
                               cap: int = DEFAULT_VERTEX_CAP) -> BoundRecord:
    """If the minimum degree is at least k(n+k-3)/(2k-1), the token
    algebraic connectivity equals the base one for all h <= k."""
    threshold = k * (G.n + k - 3) / (2 * k - 1)
    delta = min_degree(G)
    if delta < threshold - 1e-12:
        return _vacuous("min_degree_condition",
                        f"delta = {delta} < {threshold:.6g}")
    return _equality_over_h("min_degree_condition", G, k, tol, cap,
                            f"delta = {delta} >= {threshold:.6g}")


def _arnau_rhs(G: Graph, k: int, cap: int) -> float:
    if k == 2:
        return 2 * algebraic_connectivity(G) - 2
    a_prev = token_alpha(G, k - 1, cap)
    return k / (k - 1) * a_prev - k / (k - 2) * min(k - 2, max_degree(G))


def check_arnau_bound(G: Graph, k: int, tol: float = MARGIN_TOL,
                      match_tol: float = MATCH_TOL,
                      cap: int = DEFAULT_VERTEX_CAP) -> BoundRecord:
    """Conditional lower bound on the token algebraic connectivity in
    terms of the level below.  The hypothesis (alpha(F_k) not an
    eigenvalue of F_{k-1}) never holds on real graphs, so this is
    expected vacuous; the unconditional new-eigenvalue variant is
    :func:`check_arnau_new_eigenvalues`."""
    if k < 2:
        return _vacuous("arnau_bound", "needs k >= 2")
    a_tok = token_alpha(G, k, cap)
    prev = graph_spectrum(token_graph(G, k - 1, cap).graph).values
    if np.min(np.abs(prev - a_tok)) <= match_tol:
        return _vacuous("arnau_bound",
                        "alpha(F_k) is an eigenvalue of F_{k-1}")
    return _record("arnau_bound", a_tok, _arnau_rhs(G, k, cap), tol)


def check_arnau_new_eigenvalues(G: Graph, k: int, tol: float = MARGIN_TOL,
                                match_tol: float = MATCH_TOL,
                                cap: int = DEFAULT_VERTEX_CAP) -> BoundRecord:
    """Same right-hand side asserted against every eigenvalue of F_k that
    is not one of F_{k-1}."""
    if k < 2:
        return _vacuous("arnau_new_eigenvalues", "needs k >= 2")
    new = new_eigenvalues_vs_previous(G, k, match_tol, cap)
    if not new:
        return _vacuous("arnau_new_eigenvalues", "no new eigenvalues")
    return _record("arnau_new_eigenvalues", min(new), _arnau_rhs(G, k, cap), tol,
                   detail=f"{len(new)} new eigenvalues; min margin")


def check_induction_bound(G: Graph, k: int, tol: float = MARGIN_TOL,
                          match_tol: float = MATCH_TOL,
                          cap: int = DEFAULT_VERTEX_CAP) -> BoundRecord:
    """Every eigenvalue of F_k absent from F_{k-1} is at least
    k*alpha(G) - k*(k-1)."""
    if k < 2:
        return _vacuous("induction_bound", "needs k >= 2")
    new = new_eigenvalues_vs_previous(G, k, match_tol, cap)
    if not new:
        return _vacuous("induction_bound", "no new eigenvalues")
    bound = k * algebraic_connectivity(G) - k * (k - 1)
    return _record("induction_bound", min(new), bound, tol,
                   detail=f"{len(new)} new eigenvalues; min margin")


def check_log_delta_bound(G: Graph, k: int, tol: float = MARGIN_TOL,
                          match_tol: float = MATCH_TOL,
                          cap: int = DEFAULT_VERTEX_CAP) -> BoundRecord:
    """Harmonic-sum and logarithmic lower bounds (small max degree, k > 2)
    against alpha(F_k) and every eigenvalue new relative to F_{k-1}."""
    if k <= 2:
        return _vacuous("log_delta_bound", "needs k > 2")
    delta_max = max_degree(G)
    if delta_max > k - 2:
        return _vacuous("log_delta_bound",
                        f"max degree {delta_max} > k-2 = {k - 2}")
    alpha = algebraic_connectivity(G)
    harmonic = k * alpha - k * delta_max * (
        1 + sum(1.0 / r for r in range(delta_max, k - 1))
    )
    logform = k * alpha - k * delta_max * (1 + math.log((k - 1) / delta_max))
    # The harmonic sum dominates ln((k-1)/Delta), so the harmonic rhs sits
    # below the log rhs; both are asserted, the larger one drives the margin.
    candidates = [token_alpha(G, k, cap)]
    candidates += new_eigenvalues_vs_previous(G, k, match_tol, cap)
    return _record("log_delta_bound", min(candidates), max(harmonic, logform), tol,
                   detail=f"harmonic rhs {harmonic:.6g}, log rhs {logform:.6g}")


# ---------------------------------------------------------------------------
# Cited facts used inside the proofs


def check_fiedler_vertex_deletion(G: Graph, tol: float = EQ_TOL) -> BoundRecord:
    """alpha(G - x) >= alpha(G) - 1 for every vertex x."""
    if G.n < 3:
        return _vacuous("fiedler_vertex_deletion", "needs n >= 3")
    alpha = algebraic_connectivity(G)
    worst = math.inf
    for x in range(1, G.n + 1):
        H, _ = delete_vertices(G, {x})
        worst = min(worst, algebraic_connectivity(H) - (alpha - 1))
    status = PASS if worst >= -tol else FAIL
    return BoundRecord("fiedler_vertex_deletion", status, worst, 0.0, worst,
                       "min over x of alpha(G-x) - (alpha(G)-1)")


def check_product_alpha_min(G1: Graph, G2: Graph, tol: float = EQ_TOL) -> BoundRecord:
    """alpha of the Cartesian product equals min of the factor alphas."""
    from .graphs import cartesian_product

    lhs = algebraic_connectivity(cartesian_product(G1, G2))
    rhs = min(algebraic_connectivity(G1), algebraic_connectivity(G2))
    status = PASS if abs(lhs - rhs) <= tol else FAIL
    return BoundRecord("product_alpha_min", status, lhs, rhs, -abs(lhs - rhs))
