"""Thresholded similarity graph: communities, force layout, centroids, JSON bundle."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import sparse

from ._kernels.fr import spring_steps
from ._kernels.louvain import local_move
from .corpus import Corpus


class UndefinedObjectiveError(ValueError):
    """Modularity is undefined on an edgeless graph."""


@dataclass(frozen=True)
class SimilarityGraph:
    """Undirected weighted graph over corpus indices.

    Edges are stored once with i < j; weights lie in (0, 1] and exceed
    the construction threshold. Isolated nodes are kept.
    """

    names: tuple[str, ...]
    edge_i: np.ndarray
    edge_j: np.ndarray
    edge_w: np.ndarray

    @property
    def node_count(self) -> int:
        return len(self.names)

    @property
    def edge_count(self) -> int:
        return int(self.edge_i.shape[0])

    def adjacency_csr(self) -> sparse.csr_matrix:
        """Symmetric CSR adjacency (each edge stored in both directions)."""
        n = self.node_count
        rows = np.concatenate([self.edge_i, self.edge_j])
        cols = np.concatenate([self.edge_j, self.edge_i])
        vals = np.concatenate([self.edge_w, self.edge_w])
        a = sparse.csr_matrix((vals, (rows, cols)), shape=(n, n))
        a.sum_duplicates()
        a.sort_indices()
        return a

    def degrees(self) -> np.ndarray:
        """Weighted degree per node."""
        k = np.zeros(self.node_count, dtype=np.float64)
        np.add.at(k, self.edge_i, self.edge_w)
        np.add.at(k, self.edge_j, self.edge_w)
        return k


@dataclass(frozen=True)
class Partition:
    """Community label per node id; labels are dense 0..c-1."""

    labels: np.ndarray

    @property
    def community_count(self) -> int:
        return int(self.labels.max()) + 1 if self.labels.size else 0

    def __getitem__(self, node: int) -> int:
        return int(self.labels[node])


@dataclass(frozen=True)
class Layout:
    """Node positions inside a [0, W] x [0, H] frame."""

    positions: np.ndarray
    frame: tuple[float, float] = (1.0, 1.0)


@dataclass(frozen=True)
class CommunitySummary:
    """Per-community centroid and member count, indexed by community id."""

    centroids: np.ndarray
    counts: np.ndarray


def build_graph(sim: np.ndarray, names: list[str], threshold: float = 0.2) -> SimilarityGraph:
    """Edges between every pair with similarity strictly above threshold."""
    if not (0.0 <= threshold <= 1.0):
        raise ValueError(f"threshold must be in [0, 1], got {threshold}")
    n = len(names)
    if sim.shape != (n, n):
        raise ValueError(f"similarity matrix shape {sim.shape} does not match {n} names")
    iu, ju = np.triu_indices(n, k=1)
    w = sim[iu, ju]
    mask = w > threshold
    return SimilarityGraph(
        names=tuple(names),
        edge_i=iu[mask].astype(np.int64),
        edge_j=ju[mask].astype(np.int64),
        edge_w=w[mask].astype(np.float64),
    )


def modularity(g: SimilarityGraph, p: Partition) -> float:
    """Newman weighted modularity of the partition.

    Q = (1/2m) sum_ij [A_ij - k_i k_j / 2m] delta(c_i, c_j).
    """
    if g.edge_count == 0:
        raise UndefinedObjectiveError("modularity is undefined without edges")
    labels = np.asarray(p.labels)
    if labels.shape[0] != g.node_count:
        raise ValueError("partition does not cover the graph's nodes")
    m = float(g.edge_w.sum())
    k = g.degrees()
    internal = float(g.edge_w[labels[g.edge_i] == labels[g.edge_j]].sum())
    k_tot = np.bincount(labels, weights=k, minlength=int(labels.max()) + 1)
    return internal / m - float(((k_tot / (2.0 * m)) ** 2).sum())


def _dense_relabel(labels: np.ndarray) -> np.ndarray:
    _, inverse = np.unique(labels, return_inverse=True)
    return inverse.astype(np.int64)


def _one_level(a: sparse.csr_matrix, order: np.ndarray) -> np.ndarray | None:
    """Seeded local moving from singletons on one aggregation level.

    Returns dense community labels, or None when no move was made.
    """
    n = a.shape[0]
    k_deg = np.asarray(a.sum(axis=1)).ravel().astype(np.float64)
    m2 = float(k_deg.sum())
    if m2 == 0.0:
        return None
    comm = np.arange(n, dtype=np.int64)
    tot = k_deg.copy()
    moves = local_move(
        a.indptr.astype(np.int64),
        a.indices.astype(np.int64),
        a.data.astype(np.float64),
        order,
        comm,
        k_deg,
        tot,
        m2,
    )
    if moves == 0:
        return None
    return _dense_relabel(comm)


def _aggregate(a: sparse.csr_matrix, labels: np.ndarray) -> sparse.csr_matrix:
    """Collapse communities to super-nodes; self-loops carry 2x internal weight."""
    n = a.shape[0]
    c = int(labels.max()) + 1
    s = sparse.csr_matrix((np.ones(n), (np.arange(n), labels)), shape=(n, c))
    agg = (s.T @ a @ s).tocsr()
    agg.sum_duplicates()
    agg.sort_indices()
    return agg


def _refine_node_level(a: sparse.csr_matrix, labels: np.ndarray, order: np.ndarray) -> tuple[bool, np.ndarray]:
    """One convergence round of node-level moving from an existing partition."""
    n = a.shape[0]
    k_deg = np.asarray(a.sum(axis=1)).ravel().astype(np.float64)
    m2 = float(k_deg.sum())
    comm = labels.astype(np.int64).copy()
    tot = np.zeros(n, dtype=np.float64)
    np.add.at(tot, comm, k_deg)
    moves = local_move(
        a.indptr.astype(np.int64),
        a.indices.astype(np.int64),
        a.data.astype(np.float64),
        order,
        comm,
        k_deg,
        tot,
        m2,
    )
    return moves > 0, comm


def louvain(g: SimilarityGraph, seed: int) -> Partition:
    """Two-phase greedy modularity maximization.

    Local moving visits nodes in a seeded shuffle (one draw per level),
    then communities aggregate into super-nodes and the process recurses
    until a level makes no move. A final node-level sweep polishes the
    result so no single-node move can improve modularity; if it does
    move anything, aggregation restarts from the improved labels.
    """
    n = g.node_count
    if n == 0:
        raise ValueError("graph has no nodes")
    rs = np.random.RandomState(seed)
    a0 = g.adjacency_csr()
    labels = np.arange(n, dtype=np.int64)
    if g.edge_count == 0:
        return Partition(labels=labels)

    def multilevel(a_lvl: sparse.csr_matrix, labels: np.ndarray) -> np.ndarray:
        while True:
            order = rs.permutation(a_lvl.shape[0]).astype(np.int64)
            lvl = _one_level(a_lvl, order)
            if lvl is None:
                return labels
            labels = lvl[labels]
            a_lvl = _aggregate(a_lvl, lvl)

    labels = multilevel(a0, labels)
    while True:
        order = rs.permutation(n).astype(np.int64)
        moved, labels = _refine_node_level(a0, labels, order)
        labels = _dense_relabel(labels)
        if not moved:
            return Partition(labels=labels)
        labels = multilevel(_aggregate(a0, labels), labels)


def layout_fr(
    g: SimilarityGraph,
    seed: int,
    iterations: int = 50,
    frame: tuple[float, float] = (1.0, 1.0),
    weighted: bool = True,
    return_trace: bool = False,
):
    """Fruchterman-Reingold layout with seeded initial positions.

    k = sqrt(W*H/n); repulsion k^2/d over all pairs, attraction d^2/k
    along edges (scaled by similarity weight unless ``weighted`` is off);
    displacement capped by a temperature cooling linearly from W/10;
    positions clamped into the frame each iteration. Deterministic given
    (graph, seed). With ``return_trace`` the per-iteration positions are
    returned alongside the layout.
    """
    if iterations < 0:
        raise ValueError(f"iterations must be >= 0, got {iterations}")
    width, height = float(frame[0]), float(frame[1])
    n = g.node_count
    rs = np.random.RandomState(seed)
    pos = rs.random_sample((n, 2))
    pos[:, 0] *= width
    pos[:, 1] *= height
    jitter = (rs.random_sample((n, 2)) - 0.5) * 1e-9
    trace = np.zeros((iterations, n, 2), dtype=np.float64)
    if n > 0 and iterations > 0:
        k = float(np.sqrt(width * height / n))
        weights = g.edge_w if weighted else np.ones_like(g.edge_w)
        spring_steps(
            pos,
            g.edge_i,
            g.edge_j,
            weights,
            width,
            height,
            k,
            width / 10.0,
            iterations,
            jitter,
            trace,
        )
    layout = Layout(positions=pos, frame=(width, height))
    if return_trace:
        return layout, trace
    return layout


def community_centroids(l: Layout, p: Partition) -> CommunitySummary:
    """Arithmetic mean position and member count per community."""
    labels = np.asarray(p.labels)
    if labels.shape[0] != l.positions.shape[0]:
        raise ValueError("layout and partition cover different node sets")
    c = p.community_count
    counts = np.bincount(labels, minlength=c)
    sx = np.bincount(labels, weights=l.positions[:, 0], minlength=c)
    sy = np.bincount(labels, weights=l.positions[:, 1], minlength=c)
    centroids = np.stack([sx / counts, sy / counts], axis=1)
    return CommunitySummary(centroids=centroids, counts=counts)


def export_graph_json(
    g: SimilarityGraph,
    p: Partition,
    l: Layout,
    summaries: CommunitySummary,
    records: Corpus,
) -> dict:
    """Graph bundle document: nodes with hover metadata, edges, communities."""
    if len(records.records) != g.node_count:
        raise ValueError("records do not match the graph's nodes")
    nodes = []
    for i in range(g.node_count):
        r = records.records[i]
        nodes.append(
            {
                "id": i,
                "name": g.names[i],
                "downloads": r.downloads,
                "likes": r.likes,
                "params_millions": r.params_millions,
                "community": int(p.labels[i]),
                "x": float(l.positions[i, 0]),
                "y": float(l.positions[i, 1]),
            }
        )
    edges = [
        {"source": int(i), "target": int(j), "weight": float(w)}
        for i, j, w in zip(g.edge_i, g.edge_j, g.edge_w)
    ]
    communities = [
        {
            "id": c,
            "size": int(summaries.counts[c]),
            "cx": float(summaries.centroids[c, 0]),
            "cy": float(summaries.centroids[c, 1]),
        }
        for c in range(summaries.counts.shape[0])
    ]
    return {
        "nodes": nodes,
        "edges": edges,
        "communities": communities,
        "frame": {"width": l.frame[0], "height": l.frame[1]},
    }


def import_graph_json(doc: dict) -> tuple[SimilarityGraph, Partition, Layout]:
    """Rebuild graph, partition and layout from an exported bundle document."""
    nodes = doc["nodes"]
    names = tuple(node["name"] for node in nodes)
    n = len(nodes)
    labels = np.zeros(n, dtype=np.int64)
    positions = np.zeros((n, 2), dtype=np.float64)
    for node in nodes:
        i = node["id"]
        labels[i] = node["community"]
        positions[i, 0] = node["x"]
        positions[i, 1] = node["y"]
    edges = doc["edges"]
    g = SimilarityGraph(
        names=names,
        edge_i=np.asarray([e["source"] for e in edges], dtype=np.int64),
        edge_j=np.asarray([e["target"] for e in edges], dtype=np.int64),
        edge_w=np.asarray([e["weight"] for e in edges], dtype=np.float64),
    )
    frame = (doc["frame"]["width"], doc["frame"]["height"])
    return g, Partition(labels=labels), Layout(positions=positions, frame=frame)
