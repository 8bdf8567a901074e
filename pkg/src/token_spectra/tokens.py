"""k-token graphs.

Vertices of the k-token graph of G are the k-subsets of {1..n},
addressed by colex rank; two subsets are adjacent iff their symmetric
difference is {x, y} with {x, y} an edge of G.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .graphs import Graph, delete_vertices, make_graph
from .subsets import KSubsetIndex

DEFAULT_VERTEX_CAP = 20000


class VertexCapError(RuntimeError):
    """Token-graph size exceeds the configured vertex cap."""


@dataclass(frozen=True)
class TokenGraph:
    base: Graph
    k: int
    graph: Graph
    index: KSubsetIndex

    @cached_property
    def edge_ranks(self) -> tuple[np.ndarray, np.ndarray]:
        """Token edges as 0-based rank arrays (ei < ej, sorted)."""
        ei = np.fromiter((u - 1 for u, v in self.graph.edges), dtype=np.int64, count=self.graph.m)
        ej = np.fromiter((v - 1 for u, v in self.graph.edges), dtype=np.int64, count=self.graph.m)
        return ei, ej

    @cached_property
    def degree_sums(self) -> np.ndarray:
        """degree_sums[r] = sum of base-graph degrees over the rank-r subset."""
        out = np.empty(self.index.size, dtype=np.float64)
        for r, X in enumerate(self.index.subsets()):
            out[r] = sum(self.base.degree(x) for x in X)
        return out

    @cached_property
    def internal_edge_counts(self) -> np.ndarray:
        """internal_edge_counts[r] = 2 * number of base edges inside the
        rank-r subset (ordered-pair adjacency count)."""
        out = np.empty(self.index.size, dtype=np.float64)
        for r, X in enumerate(self.index.subsets()):
            out[r] = 2 * sum(1 for x, y in combinations(X, 2) if self.base.has_edge(x, y))
        return out


@lru_cache(maxsize=None)
def _build_token_graph(G: Graph, k: int) -> TokenGraph:
    index = KSubsetIndex(G.n, k)
    ei, ej = kernels.token_edge_ranks(G.n, k, G.edges)
    edges = [(int(a) + 1, int(b) + 1) for a, b in zip(ei, ej)]
    graph = make_graph(index.size, edges)
    return TokenGraph(base=G, k=k, graph=graph, index=index)


def token_graph(G: Graph, k: int, cap: int = DEFAULT_VERTEX_CAP) -> TokenGraph:
    """The k-token graph of G.  Refuses C(n,k) > cap vertices."""
    if not 1 <= k <= G.n:
        raise ValueError(f"need 1 <= k <= n={G.n}, got k={k}")
    size = math.comb(G.n, k)
    if size > cap:
        raise VertexCapError(
            f"token graph has C({G.n},{k}) = {size} vertices, above the cap {cap}"
        )
    return _build_token_graph(G, k)


def token_degree(G: Graph, X: Sequence[int]) -> int:
    """Degree of the subset X in the token graph of G:
    sum of base degrees minus twice the number of base edges inside X."""
    Xs = set(X)
    if len(Xs) != len(X):
        raise ValueError(f"repeated elements in {X!r}")
    if not Xs <= set(range(1, G.n + 1)):
        raise ValueError(f"{X!r} not a subset of [1, {G.n}]")
    internal = sum(1 for x, y in combinations(sorted(Xs), 2) if G.has_edge(x, y))
    return sum(G.degree(x) for x in Xs) - 2 * internal


def token_subset_vertices(T: TokenGraph, U: Iterable[int]) -> list[int]:
    """Ranks (ascending) of all k-subsets containing U; needs |U| <= k-1."""
    U = set(U)
    if len(U) > T.k - 1:
        raise ValueError(f"need |U| <= k-1 = {T.k - 1}, got |U| = {len(U)}")
    others = [v for v in range(1, T.base.n + 1) if v not in U]
    ranks = [T.index.rank(sorted(U | set(extra))) for extra in combinations(others, T.k - len(U))]
    ranks.sort()
    return ranks


def induced_token_subgraph(T: TokenGraph, U: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph of the token graph induced by the subsets containing U.

    Vertices are relabeled 1..|S_U| in ascending rank order.  Also returns
    the verified isomorphism onto the (k-|U|)-token graph of G-U: entry
    i-1 is the vertex of that token graph corresponding to local vertex i
    (the map X -> X \\ U, relabeled).
    """
    U = sorted(set(U))
    S_U = token_subset_vertices(T, U)
    local = {r: i + 1 for i, r in enumerate(S_U)}
    members = set(S_U)
    edges = [
        (local[u - 1], local[v - 1])
        for u, v in T.graph.edges
        if (u - 1) in members and (v - 1) in members
    ]
    H = make_graph(len(S_U), edges)

    if U:
        reduced, relabel = delete_vertices(T.base, U)
    else:
        reduced, relabel = T.base, {v: v for v in range(1, T.base.n + 1)}
    small = token_graph(reduced, T.k - len(U))
    iso = []
    for r in S_U:
        X = T.index.unrank(r)
        Z = sorted(relabel[x] for x in X if x not in U)
        iso.append(small.index.rank(Z) + 1)

    # The map must be an edge-preserving bijection; anything else means a
    # construction bug, so fail hard.
    if sorted(iso) != list(range(1, small.index.size + 1)):
        raise AssertionError("token restriction map is not a bijection")
    mapped = {tuple(sorted((iso[u - 1], iso[v - 1]))) for u, v in H.edges}
    if mapped != set(small.graph.edges):
        raise AssertionError("token restriction map is not edge-preserving")
    return H, iso
