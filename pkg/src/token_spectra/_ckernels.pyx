# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: token-edge enumeration and PQRS accumulation."""

from math import comb

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef long long _rank_with(long long[:] binom, int k, long long[:] sub, int m, int extra):
    # Colex rank of the sorted m-subset `sub` with `extra` merged in.
    # binom is a flattened table; binom[c*(k+1)+j] = C(c, j).
    cdef long long r = 0
    cdef int i, pos = 0
    cdef int placed = 0
    for i in range(m):
        if not placed and extra < sub[i]:
            r += binom[(extra - 1) * (k + 1) + pos + 1]
            pos += 1
            placed = 1
        r += binom[(sub[i] - 1) * (k + 1) + pos + 1]
        pos += 1
    if not placed:
        r += binom[(extra - 1) * (k + 1) + pos + 1]
    return r


def token_edge_ranks(int n, int k, edges):
    """Edge list of the k-token graph as sorted colex-rank pairs."""
    cdef int i, j, x, y, w, m = k - 1

    binom_np = np.zeros((n + 1) * (k + 1), dtype=np.int64)
    cdef long long[:] binom = binom_np
    for i in range(n + 1):
        binom[i * (k + 1)] = 1
        for j in range(1, k + 1):
            if i >= 1:
                binom[i * (k + 1) + j] = (
                    binom[(i - 1) * (k + 1) + j] + binom[(i - 1) * (k + 1) + j - 1]
                )

    edge_arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    cdef long long[:, :] E = edge_arr
    cdef Py_ssize_t nedges = E.shape[0]

    cdef long long per_edge = comb(n - 2, k - 1) if n >= 2 else 0
    cdef long long nout = nedges * per_edge
    ei_np = np.empty(nout, dtype=np.int64)
    ej_np = np.empty(nout, dtype=np.int64)
    cdef long long[:] ei = ei_np
    cdef long long[:] ej = ej_np

    others_np = np.empty(max(n - 2, 1), dtype=np.int64)
    sub_np = np.empty(max(m, 1), dtype=np.int64)
    idx_np = np.empty(max(m, 1), dtype=np.int64)
    cdef long long[:] others = others_np
    cdef long long[:] sub = sub_np
    cdef long long[:] idx = idx_np
    cdef int no, done
    cdef Py_ssize_t e
    cdef long long a, b, out = 0

    for e in range(nedges):
        x = <int> E[e, 0]
        y = <int> E[e, 1]
        no = 0
        for w in range(1, n + 1):
            if w != x and w != y:
                others[no] = w
                no += 1
        if m > no:
            continue
        for i in range(m):
            idx[i] = i
        while True:
            for i in range(m):
                sub[i] = others[idx[i]]
            a = _rank_with(binom, k, sub, m, x)
            b = _rank_with(binom, k, sub, m, y)
            if a < b:
                ei[out] = a
                ej[out] = b
            else:
                ei[out] = b
                ej[out] = a
            out += 1
            # next combination of m indices out of no
            done = 1
            for i in range(m - 1, -1, -1):
                if idx[i] < no - m + i:
                    idx[i] += 1
                    for j in range(i + 1, m):
                        idx[j] = idx[j - 1] + 1
                    done = 0
                    break
            if done:
                break

    ei_np = ei_np[:out]
    ej_np = ej_np[:out]
    order = np.lexsort((ej_np, ei_np))
    return np.ascontiguousarray(ei_np[order]), np.ascontiguousarray(ej_np[order])


def pqrs_terms(dsum, asum, ei, ej, v):
    """The four Rayleigh components of v on a token graph."""
    cdef double[:] d = np.ascontiguousarray(dsum, dtype=np.float64)
    cdef double[:] q = np.ascontiguousarray(asum, dtype=np.float64)
    cdef long long[:] i_ = np.ascontiguousarray(ei, dtype=np.int64)
    cdef long long[:] j_ = np.ascontiguousarray(ej, dtype=np.int64)
    cdef double[:] x = np.ascontiguousarray(v, dtype=np.float64)
    cdef Py_ssize_t t
    cdef double P = 0.0, Q = 0.0, R = 0.0, S = 0.0, xv
    for t in range(x.shape[0]):
        xv = x[t]
        P += xv * xv * d[t]
        Q += xv * xv * q[t]
        S += xv * xv
    for t in range(i_.shape[0]):
        R += x[i_[t]] * x[j_[t]]
    return P, Q, 2.0 * R, S
