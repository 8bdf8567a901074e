import math

import numpy as np
import pytest

from token_spectra.graphs import (
    complete,
    connected_components,
    cycle,
    hamming,
    make_graph,
    path,
    petersen,
)
from token_spectra.spectra import (
    EigenError,
    SymMatrix,
    algebraic_connectivity,
    eigen_sym,
    graph_spectrum,
    is_embedding,
    laplacian,
    rayleigh_quotient,
)


def test_laplacian_p2():
    assert np.array_equal(laplacian(path(2)).array, [[1, -1], [-1, 1]])


def test_laplacian_k3():
    L = laplacian(complete(3)).array
    assert np.array_equal(np.diag(L), [2, 2, 2])
    assert L[0, 1] == L[1, 2] == -1


def test_laplacian_row_sums_zero():
    assert np.allclose(laplacian(petersen()).array.sum(axis=1), 0)


def test_symmatrix_rejects_asymmetric():
    with pytest.raises(ValueError):
        SymMatrix(np.array([[0.0, 1.0], [2.0, 0.0]]))


def test_eigen_p3():
    # characteristic polynomial of L(P_3) by hand: x(x-1)(x-3)
    spec = eigen_sym(laplacian(path(3)))
    assert np.allclose(spec.values, [0, 1, 3], atol=1e-8)


def test_eigen_k4():
    spec = eigen_sym(laplacian(complete(4)))
    assert np.allclose(spec.values, [0, 4, 4, 4], atol=1e-8)


def test_eigen_c4_circulant():
    expected = sorted(2 - 2 * math.cos(2 * math.pi * j / 4) for j in range(4))
    spec = eigen_sym(laplacian(cycle(4)))
    assert np.allclose(spec.values, expected, atol=1e-8)


@pytest.mark.parametrize("G", [path(5), cycle(6), petersen(), complete(5)])
def test_reconstruction(G):
    spec = graph_spectrum(G)
    L = spec.vectors @ np.diag(spec.values) @ spec.vectors.T
    scale = max(1.0, spec.values[-1])
    assert np.max(np.abs(L - laplacian(G).array)) <= 1e-8 * scale


@pytest.mark.parametrize("edges,ncomp", [
    ([(1, 2), (3, 4)], 2),
    ([(1, 2)], 3),
    ([(1, 2), (2, 3), (3, 4)], 1),
])
def test_zero_multiplicity_counts_components(edges, ncomp):
    G = make_graph(4, edges)
    spec = graph_spectrum(G)
    assert int(np.sum(np.abs(spec.values) < 1e-8)) == ncomp
    assert len(connected_components(G)) == ncomp


def test_alpha_hamming_2_2():
    assert algebraic_connectivity(hamming(2, 2)) == pytest.approx(2, abs=1e-8)


def test_alpha_k4():
    assert algebraic_connectivity(complete(4)) == pytest.approx(4, abs=1e-8)


def test_alpha_disconnected_is_zero():
    G = make_graph(4, [(1, 2), (2, 3)])  # P_3 plus an isolated vertex
    assert algebraic_connectivity(G) == pytest.approx(0, abs=1e-10)


def test_alpha_needs_two_vertices():
    with pytest.raises(ValueError):
        algebraic_connectivity(make_graph(1, []))


def test_rayleigh_on_eigenvectors():
    G = petersen()
    spec = graph_spectrum(G)
    for j in range(G.n):
        assert rayleigh_quotient(G, spec.vectors[:, j]) == pytest.approx(
            spec.values[j], abs=1e-9)


def test_rayleigh_k2():
    assert rayleigh_quotient(complete(2), [1, -1]) == pytest.approx(2)


def test_rayleigh_matches_matrix_form():
    rng = np.random.default_rng(7)
    G = cycle(6)
    L = laplacian(G).array
    for _ in range(50):
        v = rng.standard_normal(G.n)
        matrix_form = float(v @ L @ v / (v @ v))
        assert rayleigh_quotient(G, v) == pytest.approx(matrix_form, rel=1e-10)


def test_rayleigh_bounds_and_embedding_inequality():
    rng = np.random.default_rng(11)
    G = petersen()
    spec = graph_spectrum(G)
    a = algebraic_connectivity(G)
    for _ in range(100):
        v = rng.standard_normal(G.n)
        q = rayleigh_quotient(G, v)
        assert spec.values[0] - 1e-9 <= q <= spec.values[-1] + 1e-9
        w = v - v.mean()  # embedding
        assert rayleigh_quotient(G, w) >= a - 1e-9


def test_rayleigh_zero_vector():
    with pytest.raises(ValueError):
        rayleigh_quotient(path(2), [0, 0])


def test_is_embedding():
    assert is_embedding([1, -1, 0])
    assert not is_embedding([1, 1, 1])
    spec = graph_spectrum(cycle(5))
    for j in range(1, 5):
        assert is_embedding(spec.vectors[:, j])


def test_deterministic_decomposition():
    s1 = eigen_sym(laplacian(petersen()))
    s2 = eigen_sym(laplacian(petersen()))
    assert np.array_equal(s1.values, s2.values)
    assert np.array_equal(s1.vectors, s2.vectors)


def test_dense_cap_refused():
    with pytest.raises(EigenError):
        eigen_sym(SymMatrix(np.zeros((3001, 3001))))
