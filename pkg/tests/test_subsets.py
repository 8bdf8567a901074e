import math

import pytest
from hypothesis import given, strategies as st

from token_spectra.subsets import KSubsetIndex, colex_subsets, rank, unrank


def test_colex_extremes_n4_k2():
    idx = KSubsetIndex(4, 2)
    assert idx.rank({1, 2}) == 0
    assert idx.rank({3, 4}) == 5
    assert idx.size == 6


def test_roundtrip_example():
    idx = KSubsetIndex(5, 3)
    assert idx.unrank(idx.rank({1, 3, 5})) == (1, 3, 5)


def test_ranks_are_contiguous():
    for n, k in [(5, 2), (6, 3), (7, 1), (7, 7), (4, 0)]:
        idx = KSubsetIndex(n, k)
        ranks = [idx.rank(X) for X in idx.subsets()]
        assert ranks == list(range(math.comb(n, k)))


@given(st.integers(1, 12), st.data())
def test_roundtrip_random(n, data):
    k = data.draw(st.integers(0, n))
    r = data.draw(st.integers(0, math.comb(n, k) - 1))
    X = unrank(r, k)
    assert len(X) == k
    assert rank(X) == r


def test_subsets_in_colex_order():
    assert list(colex_subsets(4, 2)) == [
        (1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]


def test_wrong_cardinality_rejected():
    idx = KSubsetIndex(5, 2)
    with pytest.raises(ValueError):
        idx.rank({1, 2, 3})
    with pytest.raises(ValueError):
        idx.unrank(10)
    with pytest.raises(ValueError):
        idx.unrank(-1)


def test_repeated_elements_rejected():
    with pytest.raises(ValueError):
        rank([2, 2])
