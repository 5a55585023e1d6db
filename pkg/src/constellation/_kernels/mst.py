"""Dense-matrix Prim kernel backing single-linkage clustering."""

import numpy as np

from . import njit


@njit(cache=True)
def prim_mst(dist):
    """Minimum spanning tree of a dense symmetric distance matrix.

    Grows the tree from node 0. Ties on the next node to attach resolve
    to the smallest node id (first scan hit); ties on the attachment
    point resolve to the smallest tree node id. The diagonal is never
    read. Returns ``(us, vs, ws)`` edge arrays in discovery order.
    """
    n = dist.shape[0]
    us = np.empty(n - 1, np.int64)
    vs = np.empty(n - 1, np.int64)
    ws = np.empty(n - 1, np.float64)
    in_tree = np.zeros(n, np.bool_)
    best = np.empty(n, np.float64)
    parent = np.zeros(n, np.int64)
    in_tree[0] = True
    for j in range(n):
        best[j] = dist[0, j]
    best[0] = np.inf
    for step in range(n - 1):
        jnext = -1
        dbest = np.inf
        for j in range(n):
            if not in_tree[j] and best[j] < dbest:
                dbest = best[j]
                jnext = j
        us[step] = parent[jnext]
        vs[step] = jnext
        ws[step] = dbest
        in_tree[jnext] = True
        best[jnext] = np.inf
        for j in range(n):
            if not in_tree[j]:
                d = dist[jnext, j]
                if d < best[j] or (d == best[j] and jnext < parent[j]):
                    best[j] = d
                    parent[j] = jnext
    return us, vs, ws
