"""Independent brute-force oracles the tests check the real implementations against.

Everything here favors obviousness over speed and shares no code with the
package paths it validates.
"""

from __future__ import annotations

import math


def params_by_scan(name: str) -> float | None:
    """Character-walk re-implementation of name-based parameter inference.

    Emulates a leftmost regex scan of digits, an optional .digits tail,
    then a unit letter: every start position is tried in order, and a
    decimal tail is dropped again when no unit follows it.
    """
    for start in range(len(name)):
        if not name[start].isdigit():
            continue
        j = start
        while j < len(name) and name[j].isdigit():
            j += 1
        end = j
        if j + 1 < len(name) and name[j] == "." and name[j + 1].isdigit():
            k = j + 1
            while k < len(name) and name[k].isdigit():
                k += 1
            if k < len(name) and name[k] in "BbMm":
                end = k
        if end < len(name) and name[end] in "BbMm":
            value = float(name[start:end])
            if name[end] in "Bb":
                value *= 1000.0
            return value if (math.isfinite(value) and value > 0) else None
    return None


def brute_tfidf(names: list[str], n_min: int = 2, n_max: int = 8):
    """Dense dict-based TF-IDF rows plus the vocabulary, smoothed idf, L2 rows."""
    docs = []
    for name in names:
        s = name.lower()
        counts: dict[str, int] = {}
        for n in range(n_min, min(n_max, len(s)) + 1):
            for i in range(len(s) - n + 1):
                counts[s[i : i + n]] = counts.get(s[i : i + n], 0) + 1
        docs.append(counts)
    vocab = sorted({t for doc in docs for t in doc}, key=lambda t: t.encode("utf-8"))
    n_docs = len(docs)
    df = {t: sum(1 for doc in docs if t in doc) for t in vocab}
    idf = {t: math.log((1 + n_docs) / (1 + df[t])) + 1.0 for t in vocab}
    rows = []
    for doc in docs:
        row = [doc.get(t, 0) * idf[t] for t in vocab]
        norm = math.sqrt(sum(w * w for w in row))
        rows.append([w / norm for w in row] if norm > 0 else row)
    return rows, vocab


def brute_cosine(rows: list[list[float]]) -> list[list[float]]:
    """Plain dot products of the (unit or zero) rows."""
    n = len(rows)
    sim = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sim[i][j] = sum(a * b for a, b in zip(rows[i], rows[j]))
    return sim


def naive_single_linkage(dist) -> list[tuple[frozenset, frozenset, float]]:
    """O(n^3) agglomeration: repeatedly merge the closest pair of clusters.

    Cluster distance is the minimum leaf-pair distance; among pairs at the
    global minimum the lexicographically smallest realizing leaf pair
    (i, j), i < j, decides which clusters merge. Returns (left members,
    right members, height) with left the side holding the smaller minimum
    leaf id.
    """
    n = len(dist)
    clusters: list[set[int]] = [{i} for i in range(n)]
    merges = []
    while len(clusters) > 1:
        best = None  # (d, i, j, a_idx, b_idx)
        for ai in range(len(clusters)):
            for bi in range(ai + 1, len(clusters)):
                for i in clusters[ai]:
                    for j in clusters[bi]:
                        lo, hi = (i, j) if i < j else (j, i)
                        cand = (dist[lo][hi], lo, hi, ai, bi)
                        if best is None or cand[:3] < best[:3]:
                            best = cand
        d, _, _, ai, bi = best
        a, b = clusters[ai], clusters[bi]
        if min(a) > min(b):
            a, b = b, a
        merges.append((frozenset(a), frozenset(b), d))
        merged = clusters[ai] | clusters[bi]
        clusters = [c for idx, c in enumerate(clusters) if idx not in (ai, bi)]
        clusters.append(merged)
    return merges


def all_partitions(items: list[int]):
    """Every set partition of the items (Bell-number many)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partial in all_partitions(rest):
        for i in range(len(partial)):
            yield partial[:i] + [partial[i] | {first}] + partial[i + 1 :]
        yield partial + [{first}]


def modularity_by_matrix(n: int, edges: list[tuple[int, int, float]], groups: list[set[int]]) -> float:
    """Q from the full adjacency matrix, summed over ordered node pairs."""
    a = [[0.0] * n for _ in range(n)]
    for i, j, w in edges:
        a[i][j] += w
        a[j][i] += w
    k = [sum(row) for row in a]
    two_m = sum(k)
    comm = {}
    for g, members in enumerate(groups):
        for i in members:
            comm[i] = g
    q = 0.0
    for i in range(n):
        for j in range(n):
            if comm[i] == comm[j]:
                q += a[i][j] - k[i] * k[j] / two_m
    return q / two_m
