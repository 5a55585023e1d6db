"""Greedy local-moving kernel for modularity maximization."""

import numpy as np

from . import njit


@njit(cache=True)
def local_move(indptr, indices, weights, node_order, comm, k_deg, tot, m2):
    """Sweep nodes in ``node_order`` until no move improves modularity.

    The adjacency is CSR with symmetric storage; diagonal entries hold
    aggregated self-loop weight and are skipped when collecting
    neighboring communities (a node's self weight travels with it).
    ``comm`` and ``tot`` are updated in place. A node moves only when
    the best neighboring community improves modularity strictly over
    staying put; equal gains resolve to the smallest community id.
    Returns the total number of moves made.
    """
    n = comm.shape[0]
    neigh_w = np.zeros(n, np.float64)
    neigh_c = np.empty(n, np.int64)
    total_moves = 0
    while True:
        sweep_moves = 0
        for oi in range(n):
            i = node_order[oi]
            ki = k_deg[i]
            n_neigh = 0
            for p in range(indptr[i], indptr[i + 1]):
                j = indices[p]
                if j == i:
                    continue
                c = comm[j]
                if neigh_w[c] == 0.0:
                    neigh_c[n_neigh] = c
                    n_neigh += 1
                neigh_w[c] += weights[p]
            old = comm[i]
            tot[old] -= ki
            # insertion gain scaled by m: w(i,c) - tot_c * k_i / 2m
            best_c = old
            best_gain = neigh_w[old] - tot[old] * ki / m2
            for q in range(n_neigh):
                c = neigh_c[q]
                if c == old:
                    continue
                gain = neigh_w[c] - tot[c] * ki / m2
                if gain > best_gain or (gain == best_gain and best_c != old and c < best_c):
                    best_gain = gain
                    best_c = c
            comm[i] = best_c
            tot[best_c] += ki
            if best_c != old:
                sweep_moves += 1
            for q in range(n_neigh):
                neigh_w[neigh_c[q]] = 0.0
        total_moves += sweep_moves
        if sweep_moves == 0:
            break
    return total_moves
