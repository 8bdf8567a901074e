"""Colexicographic ranking and unranking of k-subsets of {1, ..., n}.

The rank of a sorted subset x_1 < x_2 < ... < x_k is

    rank(X) = sum_i C(x_i - 1, i),   i = 1..k,

which runs over exactly 0 .. C(n,k)-1 with no gaps.  Colex order is the
fixed subset order used everywhere in this package: token-graph vertices
are addressed by colex rank.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence


def rank(subset: Sequence[int]) -> int:
    """Colex rank of a subset of positive integers."""
    xs = sorted(subset)
    if len(set(xs)) != len(xs):
        raise ValueError(f"subset has repeated elements: {subset!r}")
    if xs and xs[0] < 1:
        raise ValueError(f"elements must be >= 1, got {xs[0]}")
    return sum(math.comb(x - 1, i + 1) for i, x in enumerate(xs))


def unrank(r: int, k: int) -> tuple[int, ...]:
    """The k-subset with colex rank r (inverse of :func:`rank`)."""
    if r < 0:
        raise ValueError(f"rank must be nonnegative, got {r}")
    out = []
    rem = r
    for i in range(k, 0, -1):
        # Largest c with C(c-1, i) <= rem.
        c = i
        while math.comb(c, i) <= rem:
            c += 1
        out.append(c)
        rem -= math.comb(c - 1, i)
    out.reverse()
    return tuple(out)


def colex_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All k-subsets of {1..n} in colex (= rank) order."""
    if k == 0:
        yield ()
        return
    for last in range(k, n + 1):
        for rest in colex_subsets(last - 1, k - 1):
            yield rest + (last,)


@dataclass(frozen=True)
class KSubsetIndex:
    """Bijection between k-subsets of {1..n} and ranks 0 .. C(n,k)-1."""

    n: int
    k: int

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got n={self.n}, k={self.k}")

    @cached_property
    def size(self) -> int:
        return math.comb(self.n, self.k)

    def rank(self, subset: Sequence[int]) -> int:
        xs = sorted(subset)
        if len(xs) != self.k:
            raise ValueError(f"expected a {self.k}-subset, got {len(xs)} elements")
        if xs and (xs[0] < 1 or xs[-1] > self.n):
            raise ValueError(f"subset {subset!r} not contained in [1, {self.n}]")
        return rank(xs)

    def unrank(self, r: int) -> tuple[int, ...]:
        if not 0 <= r < self.size:
            raise ValueError(f"rank {r} out of range [0, {self.size})")
        return unrank(r, self.k)

    def subsets(self) -> Iterator[tuple[int, ...]]:
        return colex_subsets(self.n, self.k)
