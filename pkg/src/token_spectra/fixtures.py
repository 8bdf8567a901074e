"""The desk-scale fixture set the acceptance suite quantifies over."""

from __future__ import annotations

import math
import random
from itertools import combinations

from .graphs import Graph, complete, cycle, family, hamming, is_connected, make_graph, path, star

RANDOM_SEED = 42
SPECTRUM_CAP = 3000  # skip (G, k) with C(n, k) above this


def random_connected(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """Erdos-Renyi G(n, p), resampled until connected."""
    while True:
        edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
        G = make_graph(n, edges)
        if is_connected(G):
            return G


def acceptance_fixtures() -> list[tuple[str, Graph]]:
    out: list[tuple[str, Graph]] = []
    out += [(f"path_{n}", path(n)) for n in range(3, 9)]
    out += [(f"cycle_{n}", cycle(n)) for n in range(4, 10)]
    out += [(f"complete_{n}", complete(n)) for n in range(3, 7)]
    out.append(("petersen", family("petersen")))
    out.append(("hamming_2_2", hamming(2, 2)))
    out.append(("hamming_2_3", hamming(2, 3)))
    out.append(("star_1_5", star(5)))
    rng = random.Random(RANDOM_SEED)
    for i in range(20):
        n = rng.randint(5, 9)
        out.append((f"random_{i + 1:02d}", random_connected(n, rng)))
    return out


def feasible_ks(G: Graph, cap: int = SPECTRUM_CAP) -> list[int]:
    """k = 1 .. floor(n/2), restricted to C(n,k) <= cap."""
    return [k for k in range(1, G.n // 2 + 1) if math.comb(G.n, k) <= cap]
