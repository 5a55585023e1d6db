"""Force-accumulation kernel for the spring layout."""

import numpy as np

from . import njit


@njit(cache=True)
def spring_steps(pos, edge_i, edge_j, edge_w, width, height, k, t0, iterations, jitter, trace):
    """Run Fruchterman-Reingold iterations in place.

    ``pos`` is an (n, 2) float64 array mutated in place. Repulsion is
    k^2/d over every node pair, attraction d^2/k along edges scaled by
    edge weight, per-node displacement capped at a temperature cooling
    linearly from ``t0`` over the iteration budget, positions clamped to
    [0, width] x [0, height] each iteration. ``jitter`` separates exactly
    coincident nodes before force evaluation. ``trace`` is an
    (iterations, n, 2) array receiving the position after each iteration.
    """
    n = pos.shape[0]
    disp = np.zeros((n, 2), np.float64)
    for it in range(iterations):
        t = t0 * (iterations - it) / iterations
        for i in range(n):
            disp[i, 0] = 0.0
            disp[i, 1] = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                dx = pos[i, 0] - pos[j, 0]
                dy = pos[i, 1] - pos[j, 1]
                if dx == 0.0 and dy == 0.0:
                    dx = jitter[i, 0] - jitter[j, 0]
                    dy = jitter[i, 1] - jitter[j, 1]
                    if dx == 0.0 and dy == 0.0:
                        dx = (i - j) * 1e-12
                d2 = dx * dx + dy * dy
                f = k * k / d2
                disp[i, 0] += dx * f
                disp[i, 1] += dy * f
                disp[j, 0] -= dx * f
                disp[j, 1] -= dy * f
        for e in range(edge_i.shape[0]):
            i = edge_i[e]
            j = edge_j[e]
            dx = pos[i, 0] - pos[j, 0]
            dy = pos[i, 1] - pos[j, 1]
            if dx == 0.0 and dy == 0.0:
                dx = jitter[i, 0] - jitter[j, 0]
                dy = jitter[i, 1] - jitter[j, 1]
                if dx == 0.0 and dy == 0.0:
                    dx = (i - j) * 1e-12
            d = np.sqrt(dx * dx + dy * dy)
            f = d / k * edge_w[e]
            disp[i, 0] -= dx * f
            disp[i, 1] -= dy * f
            disp[j, 0] += dx * f
            disp[j, 1] += dy * f
        for i in range(n):
            dlen = np.sqrt(disp[i, 0] * disp[i, 0] + disp[i, 1] * disp[i, 1])
            x = pos[i, 0]
            y = pos[i, 1]
            if dlen > 0.0:
                scale = min(dlen, t) / dlen
                x = x + disp[i, 0] * scale
                y = y + disp[i, 1] * scale
            x = min(width, max(0.0, x))
            y = min(height, max(0.0, y))
            pos[i, 0] = x
            pos[i, 1] = y
            trace[it, i, 0] = x
            trace[it, i, 1] = y
