#!/usr/bin/env python3
"""Time the hot kernels on the JIT path against the interpreted numpy path.

The interpreted path is the exact same code run without numba (what you
get with CONSTELLATION_NO_NUMBA=1), so the comparison isolates the JIT.
Results from both paths are also checked to agree bit for bit.

Usage: python benchmarks/kernel_bench.py [--nodes 400] [--iterations 20]
"""

import argparse
import time

import numpy as np

from constellation._kernels import using_numba
from constellation._kernels.fr import spring_steps
from constellation._kernels.louvain import local_move
from constellation._kernels.mst import prim_mst


def timed(fn, *args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_prim(n, rs):
    m = np.triu(rs.random_sample((n, n)), 1)
    dist = m + m.T
    jit_t, jit_out = timed(prim_mst, dist)
    py_t, py_out = timed(prim_mst.py_func, dist, repeats=1)
    assert all(np.array_equal(a, b) for a, b in zip(jit_out, py_out))
    return jit_t, py_t


def bench_spring(n, iterations, rs):
    edges = max(1, n * 3)
    ei = rs.randint(0, n - 1, size=edges).astype(np.int64)
    ej = (ei + 1 + rs.randint(0, n - ei - 1)).astype(np.int64)
    ew = rs.random_sample(edges)
    jitter = (rs.random_sample((n, 2)) - 0.5) * 1e-9
    k = float(np.sqrt(1.0 / n))

    def run(fn):
        pos = np.random.RandomState(0).random_sample((n, 2))
        trace = np.zeros((iterations, n, 2))
        fn(pos, ei, ej, ew, 1.0, 1.0, k, 0.1, iterations, jitter, trace)
        return pos

    jit_t, jit_pos = timed(run, spring_steps)
    py_t, py_pos = timed(run, spring_steps.py_func, repeats=1)
    assert np.array_equal(jit_pos, py_pos)
    return jit_t, py_t


def bench_louvain(n, rs):
    from scipy import sparse

    dense = np.triu(rs.random_sample((n, n)) * (rs.random_sample((n, n)) < 0.05), 1)
    dense = dense + dense.T
    a = sparse.csr_matrix(dense)
    k_deg = np.asarray(a.sum(axis=1)).ravel()
    m2 = float(k_deg.sum())
    order = rs.permutation(n).astype(np.int64)
    indptr = a.indptr.astype(np.int64)
    indices = a.indices.astype(np.int64)
    data = a.data.astype(np.float64)

    def run(fn):
        comm = np.arange(n, dtype=np.int64)
        tot = k_deg.copy()
        fn(indptr, indices, data, order, comm, k_deg, tot, m2)
        return comm

    jit_t, jit_comm = timed(run, local_move)
    py_t, py_comm = timed(run, local_move.py_func, repeats=1)
    assert np.array_equal(jit_comm, py_comm)
    return jit_t, py_t


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nodes", type=int, default=400)
    parser.add_argument("--iterations", type=int, default=20, help="layout iterations")
    args = parser.parse_args()

    if not using_numba():
        print("numba is disabled (CONSTELLATION_NO_NUMBA) or missing; nothing to compare")
        return

    rs = np.random.RandomState(1234)
    n = args.nodes
    rows = [
        ("prim_mst (dense MST)", *bench_prim(n, rs)),
        (f"spring_steps ({args.iterations} iters)", *bench_spring(n, args.iterations, rs)),
        ("local_move (one level)", *bench_louvain(n, rs)),
    ]

    print(f"\nkernels at n={n} (best of 3 jitted, 1 interpreted run; identical outputs)\n")
    print(f"{'kernel':<28} {'numba':>10} {'numpy':>10} {'speedup':>9}")
    print("-" * 60)
    for name, jit_t, py_t in rows:
        print(f"{name:<28} {jit_t * 1e3:>8.1f}ms {py_t * 1e3:>8.1f}ms {py_t / jit_t:>8.1f}x")


if __name__ == "__main__":
    main()
