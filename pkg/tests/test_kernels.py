"""The JIT-compiled kernels and their interpreted fallbacks must agree exactly."""

import numpy as np
import pytest

from constellation._kernels import using_numba
from constellation._kernels.fr import spring_steps
from constellation._kernels.louvain import local_move
from constellation._kernels.mst import prim_mst

pytestmark = pytest.mark.skipif(
    not using_numba(), reason="kernels already run on the interpreted path"
)


def symmetric_matrix(rs, n):
    m = np.triu(rs.random_sample((n, n)), 1)
    return m + m.T


def test_prim_mst_paths_identical():
    rs = np.random.RandomState(0)
    for n in (2, 7, 40):
        dist = symmetric_matrix(rs, n)
        jitted = prim_mst(dist)
        plain = prim_mst.py_func(dist)
        for a, b in zip(jitted, plain):
            assert np.array_equal(a, b)


def test_spring_steps_paths_identical():
    rs = np.random.RandomState(1)
    n, iters = 30, 20
    pos_a = rs.random_sample((n, 2))
    pos_b = pos_a.copy()
    jitter = (rs.random_sample((n, 2)) - 0.5) * 1e-9
    ei = np.array([0, 1, 2, 10], dtype=np.int64)
    ej = np.array([5, 6, 7, 20], dtype=np.int64)
    ew = np.array([0.5, 0.9, 0.3, 1.0])
    trace_a = np.zeros((iters, n, 2))
    trace_b = np.zeros((iters, n, 2))
    k = float(np.sqrt(1.0 / n))
    spring_steps(pos_a, ei, ej, ew, 1.0, 1.0, k, 0.1, iters, jitter, trace_a)
    spring_steps.py_func(pos_b, ei, ej, ew, 1.0, 1.0, k, 0.1, iters, jitter, trace_b)
    assert np.array_equal(pos_a, pos_b)
    assert np.array_equal(trace_a, trace_b)


def test_local_move_paths_identical():
    from scipy import sparse

    rs = np.random.RandomState(2)
    n = 40
    dense = symmetric_matrix(rs, n) * (rs.random_sample((n, n)) < 0.15)
    dense = np.triu(dense, 1)
    dense = dense + dense.T
    a = sparse.csr_matrix(dense)
    k_deg = np.asarray(a.sum(axis=1)).ravel()
    m2 = float(k_deg.sum())
    order = rs.permutation(n).astype(np.int64)

    def run(func):
        comm = np.arange(n, dtype=np.int64)
        tot = k_deg.copy()
        moves = func(
            a.indptr.astype(np.int64),
            a.indices.astype(np.int64),
            a.data.astype(np.float64),
            order,
            comm,
            k_deg,
            tot,
            m2,
        )
        return moves, comm, tot

    moves_a, comm_a, tot_a = run(local_move)
    moves_b, comm_b, tot_b = run(local_move.py_func)
    assert moves_a == moves_b
    assert np.array_equal(comm_a, comm_b)
    assert np.array_equal(tot_a, tot_b)
