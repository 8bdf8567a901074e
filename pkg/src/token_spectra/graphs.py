"""Simple undirected graphs on vertices 1..n.

Graphs are immutable (hashable, usable as cache keys).  Vertices are
1-based in every public surface, matching the edge-list file format.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple graph: vertex set {1..n}, canonical sorted edge tuple."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """neighbors[v-1] is the sorted neighbor tuple of vertex v."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u - 1].append(v)
            adj[v - 1].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.neighbors)

    def degree(self, v: int) -> int:
        return self.degrees[v - 1]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a Graph, deduplicating edges and validating endpoints."""
    if n < 1:
        raise GraphError(f"need n >= 1, got n={n}")
    seen: set[tuple[int, int]] = set()
    for e in edges:
        u, v = e
        if u == v:
            raise GraphError(f"self-loop ({u},{v}) not allowed")
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphError(f"edge ({u},{v}) out of range [1, {n}]")
        seen.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(seen)))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return make_graph(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return make_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete needs n >= 1")
    return make_graph(n, itertools.combinations(range(1, n + 1), 2))


def star(leaves: int) -> Graph:
    """Star K_{1,leaves}: center vertex 1."""
    if leaves < 1:
        raise GraphError("star needs at least one leaf")
    return make_graph(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def hamming(d: int, q: int) -> Graph:
    """Hamming graph H(d,q): words of length d over {1..q}, adjacent iff
    they differ in exactly one coordinate.  Words in lexicographic order."""
    if d < 1 or q < 2:
        raise GraphError(f"hamming needs d >= 1 and q >= 2, got d={d}, q={q}")
    words = list(itertools.product(range(1, q + 1), repeat=d))
    index = {w: i + 1 for i, w in enumerate(words)}
    edges = []
    for w in words:
        for pos in range(d):
            for a in range(w[pos] + 1, q + 1):
                edges.append((index[w], index[w[:pos] + (a,) + w[pos + 1 :]]))
    return make_graph(q**d, edges)


def petersen() -> Graph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(i + 5, (i + 1) % 5 + 6) for i in range(1, 6)]  # pentagram
    return make_graph(10, outer + spokes + inner)


_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "star": (star, 1),
    "hamming": (hamming, 2),
    "petersen": (petersen, 0),
}


def family(name: str, *params: int) -> Graph:
    """Named graph family: path, cycle, complete, star, hamming, petersen."""
    try:
        fn, nparams = _FAMILIES[name]
    except KeyError:
        raise GraphError(f"unknown family {name!r}; known: {sorted(_FAMILIES)}")
    if len(params) != nparams:
        raise GraphError(f"family {name!r} takes {nparams} parameter(s), got {len(params)}")
    return fn(*params)


def delete_vertices(G: Graph, U: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Remove the vertices in U; relabel survivors 1..n-|U| preserving order.

    Returns the reduced graph and the old->new relabeling map.
    """
    U = set(U)
    if not U <= set(range(1, G.n + 1)):
        raise GraphError(f"U = {sorted(U)} not a subset of [1, {G.n}]")
    if len(U) >= G.n:
        raise GraphError("cannot delete every vertex")
    kept = [v for v in range(1, G.n + 1) if v not in U]
    relabel = {v: i + 1 for i, v in enumerate(kept)}
    edges = [(relabel[u], relabel[v]) for u, v in G.edges if u not in U and v not in U]
    return make_graph(len(kept), edges), relabel


def cartesian_product(G1: Graph, G2: Graph) -> Graph:
    """Cartesian product; vertex (u1,u2) maps to (u1-1)*n2 + u2 (row-major)."""
    n1, n2 = G1.n, G2.n
    vid = lambda u1, u2: (u1 - 1) * n2 + u2
    edges = []
    for u1 in range(1, n1 + 1):
        for v2, w2 in G2.edges:
            edges.append((vid(u1, v2), vid(u1, w2)))
    for u2 in range(1, n2 + 1):
        for v1, w1 in G1.edges:
            edges.append((vid(v1, u2), vid(w1, u2)))
    return make_graph(n1 * n2, edges)


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in G.neighbors[v - 1]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == G.n


def connected_components(G: Graph) -> list[list[int]]:
    comps = []
    seen: set[int] = set()
    for s in range(1, G.n + 1):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for w in G.neighbors[v - 1]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def max_degree(G: Graph) -> int:
    return max(G.degrees)


def min_degree(G: Graph) -> int:
    return min(G.degrees)


# Edge-list text format: first line "n m", then m lines "u v" (1-based).
# Blank lines and '#' comments are ignored.


def parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}")
    if not rows:
        raise GraphError("empty edge-list input")
    n, m = rows[0]
    if len(rows) - 1 != m:
        raise GraphError(f"header declares {m} edges, found {len(rows) - 1}")
    return make_graph(n, rows[1:])


def format_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines += [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())
