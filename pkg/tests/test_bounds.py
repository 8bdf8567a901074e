import math

import numpy as np
import pytest

from token_spectra import bounds
from token_spectra.bounds import FAIL, PASS, VACUOUS
from token_spectra.graphs import complete, cycle, make_graph, path, petersen, star
from token_spectra.spectra import rayleigh_quotient
from token_spectra.tokens import token_graph


def brute_pqrs(G, k, v):
    """Independent oracle straight from the definitions."""
    T = token_graph(G, k)
    v = np.asarray(v, dtype=np.float64)
    P = Q = 0.0
    for r, X in enumerate(T.index.subsets()):
        P += v[r] ** 2 * sum(G.degree(x) for x in X)
        # ordered pairs (x, y) inside X with {x, y} an edge
        Q += v[r] ** 2 * 2 * sum(
            1 for i, x in enumerate(X) for y in X[i + 1:] if G.has_edge(x, y))
    ei, ej = T.edge_ranks
    R = 2.0 * float(v[ei] @ v[ej])
    S = float(v @ v)
    return P, Q, R, S


@pytest.mark.parametrize("G,k", [(cycle(7), 2), (complete(4), 2), (path(6), 3),
                                 (petersen(), 2), (complete(5), 3)])
def test_pqrs_matches_brute_force(G, k):
    rng = np.random.default_rng(17)
    for _ in range(5):
        v = rng.standard_normal(math.comb(G.n, k))
        p = bounds.pqrs(G, k, v)
        P, Q, R, S = brute_pqrs(G, k, v)
        assert p.P == pytest.approx(P, rel=1e-12)
        assert p.Q == pytest.approx(Q, rel=1e-12)
        assert p.R == pytest.approx(R, rel=1e-12)
        assert p.S == pytest.approx(S, rel=1e-12)


def test_pqrs_quotient_is_rayleigh():
    G, k = cycle(6), 2
    rng = np.random.default_rng(23)
    T = token_graph(G, k)
    for _ in range(10):
        v = rng.standard_normal(T.index.size)
        assert bounds.pqrs(G, k, v).quotient == pytest.approx(
            rayleigh_quotient(T.graph, v), rel=1e-10)


def test_pqrs_k4_all_ones():
    # K_4, k=2, v=1: every 2-subset has degree sum 3+3=6, six subsets, so
    # P = 36; each subset is one edge, ordered -> Q = 12; R = 2*12; S = 6.
    p = bounds.pqrs(complete(4), 2, np.ones(6))
    assert (p.P, p.Q, p.R, p.S) == (36.0, 12.0, 24.0, 6.0)
    assert p.quotient == pytest.approx(0.0, abs=1e-12)


def test_pqrs_rejects_zero_vector():
    with pytest.raises(ValueError):
        bounds.pqrs(path(4), 2, np.zeros(6))


def test_pqrs_batch_agrees():
    G, k = petersen(), 2
    rng = np.random.default_rng(29)
    V = rng.standard_normal((math.comb(G.n, k), 7))
    batch = bounds.pqrs_batch(G, k, V)
    for c in range(7):
        p = bounds.pqrs(G, k, V[:, c])
        assert np.allclose(batch[:, c], [p.P, p.Q, p.R, p.S], rtol=1e-12)


def test_vz_star_example():
    # C_4, k=2, v indexed by colex: {1,2},{1,3},{2,3},{1,4},{2,4},{3,4}
    v = np.arange(1.0, 7.0)
    w = bounds.vz_star(4, 2, v, 2)
    # Z = {1},{2},{3},{4}: v({1,2})=1, 0 (2 in Z), v({2,3})=3, v({2,4})=5
    assert np.array_equal(w, [1.0, 0.0, 3.0, 5.0])


def test_vz_star_validation():
    with pytest.raises(ValueError):
        bounds.vz_star(4, 1, np.ones(4), 1)
    with pytest.raises(ValueError):
        bounds.vz_star(4, 2, np.ones(6), 5)


@pytest.mark.parametrize("G,k", [(cycle(7), 2), (path(6), 3), (complete(5), 2),
                                 (cycle(8), 4)])
def test_recursion_identity(G, k):
    rng = np.random.default_rng(31)
    for _ in range(3):
        v = rng.standard_normal(math.comb(G.n, k))
        rec = bounds.check_pqrs_recursion(G, k, v)
        assert rec.status == PASS, rec.detail


def test_recursion_vacuous_k1():
    assert bounds.check_pqrs_recursion(path(4), 1, np.ones(4)).status == VACUOUS


@pytest.mark.parametrize("G,k", [(cycle(7), 2), (petersen(), 3), (path(5), 2)])
def test_identity_and_qs(G, k):
    rng = np.random.default_rng(37)
    for _ in range(3):
        v = rng.standard_normal(math.comb(G.n, k))
        assert bounds.check_pqrs_identity(G, k, v).status == PASS
        assert bounds.check_qs_bound(G, k, v).status == PASS


def test_qs_tight_on_k4():
    # equality Q = k*min(k-1, Delta)*S at v = 1 on K_4, k = 2
    p = bounds.pqrs(complete(4), 2, np.ones(6))
    assert p.Q == pytest.approx(2 * min(1, 3) * p.S, abs=1e-9)
    rec = bounds.check_qs_bound(complete(4), 2, np.ones(6))
    assert rec.status == PASS and abs(rec.margin) <= 1e-9


def test_token_alpha_equals_base():
    for G in [cycle(7), path(6), petersen(), complete(5)]:
        rec = bounds.check_alpha_equality_oracle(G, 2)
        assert rec.status == PASS and abs(rec.lhs - rec.rhs) <= 1e-7


def test_alpha_oracle_vacuous_when_disconnected():
    G = make_graph(5, [(1, 2), (3, 4)])
    assert bounds.check_alpha_equality_oracle(G, 2).status == VACUOUS


def test_new_eigenvalues_octahedron():
    assert bounds.new_eigenvalues_vs_base(complete(4), 2) == pytest.approx([6, 6])
    assert bounds.new_eigenvalues_vs_previous(complete(4), 2) == pytest.approx([6, 6])


def test_new_eigenvalue_bound_k4_tight():
    rec = bounds.check_new_eigenvalue_bound(complete(4), 2)
    assert rec.status == PASS
    assert rec.lhs == pytest.approx(6.0, abs=1e-8)
    assert rec.rhs == pytest.approx(6.0)  # 2*(4-2+1)
    assert abs(rec.margin) <= 1e-7


def test_new_eigenvalue_bound_fails_on_j_6_3():
    # F_3(K_6) has eigenvalue 10, absent from spec(K_6) = {0, 6}, yet
    # 10 < 3*(6-3+1) = 12: the vs-base form of the bound is genuinely
    # violated and the check must say so.
    rec = bounds.check_new_eigenvalue_bound(complete(6), 3)
    assert rec.status == FAIL
    assert rec.lhs == pytest.approx(10.0, abs=1e-7)
    assert rec.rhs == pytest.approx(12.0)


def test_induction_bound_holds_on_j_6_3():
    # relative to F_2(K_6) the smallest new eigenvalue is 12 >= 3*6-6
    rec = bounds.check_induction_bound(complete(6), 3)
    assert rec.status == PASS
    assert rec.lhs == pytest.approx(12.0, abs=1e-7)
    assert rec.rhs == pytest.approx(12.0)


@pytest.mark.parametrize("G,k", [(cycle(7), 3), (path(6), 3), (petersen(), 3),
                                 (complete(5), 2)])
def test_induction_bound_more_fixtures(G, k):
    rec = bounds.check_induction_bound(G, k)
    assert rec.status in (PASS, VACUOUS)
    if rec.status == PASS:
        assert rec.margin >= -1e-6


def test_conditional_alpha_vacuous_on_real_graphs():
    assert bounds.check_conditional_alpha_bound(cycle(6), 3).status == VACUOUS


def test_conditional_alpha_predicate_core():
    # synthetic strictly decreasing chain: hypothesis holds, bound checked
    rec = bounds.conditional_alpha_record([1.5, 1.2])
    assert rec.status == PASS and rec.rhs == pytest.approx(2 * (1.5 - 1))
    rec = bounds.conditional_alpha_record([5.0, 1.0, 0.5])
    assert rec.status == FAIL
    assert bounds.conditional_alpha_record([5.0, 5.0, 4.0]).status == VACUOUS


def test_corollary_alpha_geq_k():
    # alpha(K_5) = 5 >= 2: hypothesis holds and equalities follow
    rec = bounds.check_corollary_alpha_geq_k(complete(5), 2)
    assert rec.status == PASS
    # alpha(P_6) < 2: vacuous
    assert bounds.check_corollary_alpha_geq_k(path(6), 2).status == VACUOUS


def test_min_degree_condition():
    # K_6, k=2: threshold 2*(6+2-3)/3 = 10/3, delta = 5 -> holds
    rec = bounds.check_min_degree_condition(complete(6), 2)
    assert rec.status == PASS
    # C_7, k=2: threshold 2*6/3 = 4 > delta = 2 -> vacuous
    assert bounds.check_min_degree_condition(cycle(7), 2).status == VACUOUS


def test_arnau_bound_vacuous_and_new_form():
    # alpha(F_k) is always an eigenvalue of F_{k-1}, so conditional form
    # is vacuous; the new-eigenvalue form is assertable
    assert bounds.check_arnau_bound(complete(4), 2).status == VACUOUS
    rec = bounds.check_arnau_new_eigenvalues(complete(4), 2)
    assert rec.status == PASS
    assert rec.lhs == pytest.approx(6.0, abs=1e-7)
    assert rec.rhs == pytest.approx(2 * 4 - 2)


def test_log_delta_bound():
    assert bounds.check_log_delta_bound(cycle(6), 2).status == VACUOUS
    assert bounds.check_log_delta_bound(petersen(), 3).status == VACUOUS  # Delta=3>1
    rec = bounds.check_log_delta_bound(path(8), 4)  # Delta = 2 <= k-2
    assert rec.status == PASS, rec.detail


def test_fiedler_vertex_deletion():
    for G in [cycle(6), petersen(), complete(5), star(5)]:
        rec = bounds.check_fiedler_vertex_deletion(G)
        assert rec.status == PASS and rec.lhs >= -1e-7


def test_product_alpha_min():
    rec = bounds.check_product_alpha_min(complete(2), path(3))
    assert rec.status == PASS
    rec = bounds.check_product_alpha_min(complete(3), complete(3))
    assert rec.status == PASS and rec.lhs == pytest.approx(3.0, abs=1e-8)
