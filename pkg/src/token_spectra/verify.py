"""Verification battery: run every check for a (graph, k) grid and
serialize the records.

Record order is deterministic: (graph id, k, check name).  Serialized
output is byte-identical across runs for identical configuration.
"""

from __future__ import annotations

import json
import math
import zlib
from typing import Sequence

import numpy as np

from . import bounds
from .bounds import FAIL, PASS, BoundRecord, BoundReport
from .graphs import Graph
from .lift import MATCH_TOL, spectral_inclusion_check
from .spectra import algebraic_connectivity, graph_spectrum
from .tokens import DEFAULT_VERTEX_CAP, token_graph

SCHEMA_VERSION = 1
DEFAULT_RANDOM_VECTORS = 16


def _seed(name: str, k: int) -> int:
    # Stable across processes (unlike hash()).
    return zlib.crc32(f"{name}:{k}".encode())


def _worst(records: list[BoundRecord]) -> BoundRecord:
    """Merge per-vector records into the one with the smallest margin."""
    failed = [r for r in records if r.status == FAIL]
    pool = failed or records
    return min(pool, key=lambda r: math.inf if r.margin is None else r.margin)


def _vector_checks(G: Graph, k: int, nvec: int, cap: int) -> list[BoundRecord]:
    rng = np.random.default_rng(_seed("vectors", k) ^ _seed(repr(G.edges), G.n))
    size = math.comb(G.n, k)
    idents, recurs, qss = [], [], []
    for _ in range(nvec):
        v = rng.standard_normal(size)
        idents.append(bounds.check_pqrs_identity(G, k, v))
        recurs.append(bounds.check_pqrs_recursion(G, k, v))
        qss.append(bounds.check_qs_bound(G, k, v))
    return [_worst(idents), _worst(recurs), _worst(qss)]


def _inclusion_record(G: Graph, k: int, cap: int) -> BoundRecord:
    if k == 1:
        small = graph_spectrum(G)
    else:
        small = graph_spectrum(token_graph(G, k - 1, cap).graph)
    large = graph_spectrum(token_graph(G, k, cap).graph)
    match = spectral_inclusion_check(small, large, MATCH_TOL)
    if match.ok:
        return BoundRecord("spectral_inclusion", PASS, match.max_gap, MATCH_TOL,
                           MATCH_TOL - match.max_gap,
                           f"{len(match.pairs)} matched, {len(match.unmatched)} new")
    return BoundRecord("spectral_inclusion", FAIL, match.failed_at, MATCH_TOL,
                       None, "multiset inclusion failed")


def verify_graph(name: str, G: Graph, ks: Sequence[int],
                 tol: float = bounds.MARGIN_TOL,
                 cap: int = DEFAULT_VERTEX_CAP,
                 nvec: int = DEFAULT_RANDOM_VECTORS) -> list[BoundReport]:
    """Run the full battery for each k; raises VertexCapError up front if
    any requested k is infeasible."""
    reports = []
    for k in ks:
        T = token_graph(G, k, cap)
        records = [
            bounds.check_alpha_equality_oracle(G, k, cap=cap),
            bounds.check_arnau_bound(G, k, tol, cap=cap),
            bounds.check_arnau_new_eigenvalues(G, k, tol, cap=cap),
            bounds.check_conditional_alpha_bound(G, k, tol, cap=cap),
            bounds.check_corollary_alpha_geq_k(G, k, cap=cap),
            bounds.check_induction_bound(G, k, tol, cap=cap),
            bounds.check_log_delta_bound(G, k, tol, cap=cap),
            bounds.check_min_degree_condition(G, k, cap=cap),
            bounds.check_new_eigenvalue_bound(G, k, tol, cap=cap),
            _inclusion_record(G, k, cap),
        ]
        records.extend(_vector_checks(G, k, nvec, cap))
        records.sort(key=lambda r: r.check)
        alpha_tok = algebraic_connectivity(T.graph) if T.index.size >= 2 else None
        new_vals = bounds.new_eigenvalues_vs_base(G, k, cap=cap)
        reports.append(BoundReport(
            graph=name,
            k=k,
            alpha_base=algebraic_connectivity(G),
            alpha_token=alpha_tok,
            new_eigenvalues=new_vals,
            records=records,
        ))
    return reports


def flatten(reports: Sequence[BoundReport]) -> list[dict]:
    rows = []
    for rep in sorted(reports, key=lambda r: (r.graph, r.k)):
        for rec in rep.records:
            rows.append({
                "graph": rep.graph,
                "k": rep.k,
                "check": rec.check,
                "status": rec.status,
                "lhs": rec.lhs,
                "rhs": rec.rhs,
                "margin": rec.margin,
                "detail": rec.detail,
            })
    return rows


def has_failures(reports: Sequence[BoundReport]) -> bool:
    return any(rec.status == FAIL for rep in reports for rec in rep.records)


def to_json(reports: Sequence[BoundReport]) -> str:
    doc = {"schema": SCHEMA_VERSION, "records": flatten(reports)}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def to_csv(reports: Sequence[BoundReport]) -> str:
    cols = ["graph", "k", "check", "status", "lhs", "rhs", "margin"]
    lines = [",".join(cols)]
    for row in flatten(reports):
        lines.append(",".join("" if row[c] is None else str(row[c]) for c in cols))
    return "\n".join(lines) + "\n"


def to_text(reports: Sequence[BoundReport]) -> str:
    lines = []
    for row in flatten(reports):
        margin = "" if row["margin"] is None else f" margin={row['margin']:.3e}"
        lines.append(f"{row['graph']} k={row['k']} {row['check']}: "
                     f"{row['status']}{margin}")
    return "\n".join(lines) + "\n"
