"""Single-linkage hierarchical clustering: dendrograms, flat cuts, tree export."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._kernels.mst import prim_mst
from .corpus import Corpus


class EmptyInputError(ValueError):
    """Clustering needs at least one observation."""


class MergeStep(NamedTuple):
    left: int
    right: int
    height: float
    size: int


@dataclass(frozen=True)
class Dendrogram:
    """Merge tree over leaves 0..n-1; merge i creates node n+i.

    Heights are non-decreasing (single-linkage monotonicity) and within
    [0, 1]. For each merge, ``left`` is the child cluster containing the
    smaller minimum leaf id.
    """

    leaf_count: int
    merges: tuple[MergeStep, ...]


@dataclass(frozen=True)
class FlatClustering:
    """Leaf labels 0..k-1, numbered in order of each cluster's smallest leaf."""

    labels: tuple[int, ...]
    k: int


def _validate_distance_matrix(dist: np.ndarray):
    if dist.ndim != 2 or dist.shape[0] != dist.shape[1]:
        raise ValueError(f"distance matrix must be square, got shape {dist.shape}")
    n = dist.shape[0]
    if n == 0:
        raise EmptyInputError("cannot cluster an empty distance matrix")
    if np.any(np.diagonal(dist) != 0.0):
        raise ValueError("distance matrix diagonal must be zero")
    if np.any(dist < 0.0) or np.any(dist > 1.0):
        raise ValueError("distances must lie in [0, 1]")
    if not np.array_equal(dist, dist.T):
        raise ValueError("distance matrix must be symmetric")


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int):
        self.parent[b] = a


def single_linkage(dist: np.ndarray) -> Dendrogram:
    """Agglomerate with cluster distance = minimum pairwise leaf distance.

    Built from the minimum spanning tree of the distance matrix: the MST
    edges sorted by (weight, smaller leaf id, larger leaf id) are exactly
    the single-linkage merge sequence, so heights equal the sorted MST
    edge weights.
    """
    dist = np.ascontiguousarray(dist, dtype=np.float64)
    _validate_distance_matrix(dist)
    n = dist.shape[0]
    if n == 1:
        return Dendrogram(leaf_count=1, merges=())
    us, vs, ws = prim_mst(dist)
    lo = np.minimum(us, vs)
    hi = np.maximum(us, vs)
    order = np.lexsort((hi, lo, ws))

    uf = _UnionFind(n)
    node_id = list(range(n))
    min_leaf = list(range(n))
    size = [1] * n
    merges = []
    for step, e in enumerate(order):
        ra = uf.find(int(lo[e]))
        rb = uf.find(int(hi[e]))
        if min_leaf[ra] > min_leaf[rb]:
            ra, rb = rb, ra
        merges.append(MergeStep(node_id[ra], node_id[rb], float(ws[e]), size[ra] + size[rb]))
        uf.union(ra, rb)
        node_id[ra] = n + step
        size[ra] += size[rb]
    return Dendrogram(leaf_count=n, merges=tuple(merges))


def cut(d: Dendrogram, k: int) -> FlatClustering:
    """Undo the last k-1 merges; the remaining merge forest's components are the clusters."""
    n = d.leaf_count
    if not (1 <= k <= n):
        raise ValueError(f"k must be in [1, {n}], got {k}")
    # representative leaf per dendrogram node, so unions stay O(1)
    rep = list(range(n)) + [0] * len(d.merges)
    for i, m in enumerate(d.merges):
        rep[n + i] = rep[m.left]
    uf = _UnionFind(n)
    for m in d.merges[: n - k]:
        uf.union(uf.find(rep[m.left]), uf.find(rep[m.right]))
    label_of_root: dict[int, int] = {}
    labels = []
    for leaf in range(n):
        root = uf.find(leaf)
        if root not in label_of_root:
            label_of_root[root] = len(label_of_root)
        labels.append(label_of_root[root])
    return FlatClustering(labels=tuple(labels), k=k)


def cluster_sizes(f: FlatClustering) -> list[int]:
    """Member counts indexed by cluster label."""
    counts = [0] * f.k
    for label in f.labels:
        counts[label] += 1
    return counts


_NEEDS_QUOTE = set(" ,():;'")


def _newick_label(name: str) -> str:
    if any(ch in _NEEDS_QUOTE for ch in name):
        return "'" + name.replace("'", "''") + "'"
    return name


def _node_children(d: Dendrogram):
    """children[node] = (left, right) for internal nodes, heights per node."""
    n = d.leaf_count
    heights = [0.0] * (n + len(d.merges))
    children = {}
    for i, m in enumerate(d.merges):
        children[n + i] = (m.left, m.right)
        heights[n + i] = m.height
    return children, heights


def to_newick(d: Dendrogram, labels: list[str]) -> str:
    """Newick text; child branch length = parent height - child height."""
    n = d.leaf_count
    if len(labels) != n:
        raise ValueError(f"need {n} labels, got {len(labels)}")
    if n == 1:
        return _newick_label(labels[0]) + ";"
    children, heights = _node_children(d)
    root = n + len(d.merges) - 1

    # iterative post-order rendering; trees over many leaves can be deep
    rendered: dict[int, str] = {}
    stack = [root]
    while stack:
        node = stack.pop()
        if node < n:
            rendered[node] = _newick_label(labels[node])
            continue
        left, right = children[node]
        if left in rendered and right in rendered:
            h = heights[node]
            parts = []
            for child in (left, right):
                parts.append(f"{rendered.pop(child)}:{h - heights[child]!r}")
            rendered[node] = "(" + ",".join(parts) + ")"
        else:
            stack.extend((node, right, left))
    return rendered[root] + ";"


def to_nested_json(d: Dendrogram, labels: list[str], records: Corpus) -> dict:
    """Nested tree document isomorphic to the Newick output.

    Leaves carry ``name`` and a ``meta`` block with downloads, likes and
    params_millions; internal nodes carry only height and children.
    """
    n = d.leaf_count
    if len(labels) != n:
        raise ValueError(f"need {n} labels, got {len(labels)}")
    if len(records.records) != n:
        raise ValueError(f"need {n} records, got {len(records.records)}")
    docs: list[dict] = []
    for i in range(n):
        r = records.records[i]
        docs.append(
            {
                "name": labels[i],
                "height": 0.0,
                "children": [],
                "meta": {
                    "downloads": r.downloads,
                    "likes": r.likes,
                    "params_millions": r.params_millions,
                },
            }
        )
    for m in d.merges:
        docs.append({"height": m.height, "children": [docs[m.left], docs[m.right]]})
    return docs[-1]


def tree_doc_to_newick(doc: dict) -> str:
    """Render the Newick string of a nested tree document (round-trip check)."""
    out: dict[int, str] = {}
    stack: list[tuple[dict, bool]] = [(doc, False)]
    while stack:
        node, expanded = stack.pop()
        if not node["children"]:
            out[id(node)] = _newick_label(node["name"])
        elif expanded:
            parts = [
                f"{out.pop(id(child))}:{node['height'] - child['height']!r}"
                for child in node["children"]
            ]
            out[id(node)] = "(" + ",".join(parts) + ")"
        else:
            stack.append((node, True))
            for child in reversed(node["children"]):
                stack.append((child, False))
    return out[id(doc)] + ";"
