"""Full atlas computation: filter, featurize, cluster, graph, summarize."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import analytics, cluster, graph, textfeat
from .corpus import Corpus, filter_min_downloads

DEFAULT_MIN_DOWNLOADS = 10000
DEFAULT_CLUSTERS = 20
DEFAULT_THRESHOLD = 0.2
DEFAULT_ITERATIONS = 50
DEFAULT_SEED = 42
DEFAULT_WORDCLOUD_TOP_N = 30


class EmptySelectionError(ValueError):
    """No records survive the download filter."""


class BadClusterCountError(ValueError):
    """k exceeds the filtered model count."""


@dataclass(frozen=True)
class AtlasResult:
    """All artifact documents computed from one filtered corpus and seed."""

    model_count: int
    cluster_count: int
    community_count: int
    stats: dict
    newick: str
    tree: dict
    graph: dict
    wordclouds: dict
    scatter: dict


def compute_atlas(
    corpus: Corpus,
    min_downloads: int = DEFAULT_MIN_DOWNLOADS,
    k: int = DEFAULT_CLUSTERS,
    threshold: float = DEFAULT_THRESHOLD,
    seed: int = DEFAULT_SEED,
    iterations: int = DEFAULT_ITERATIONS,
    wordcloud_top_n: int = DEFAULT_WORDCLOUD_TOP_N,
) -> AtlasResult:
    """Run the pipeline on the download-filtered corpus.

    Features, tree, graph and word tables are all recomputed on the
    filtered subset, so the corpus a query sees is self-contained.
    """
    filtered = filter_min_downloads(corpus, min_downloads)
    n = len(filtered.records)
    if n == 0:
        raise EmptySelectionError("no models above threshold")
    if k < 1 or k > n:
        raise BadClusterCountError(f"k={k} exceeds filtered model count {n}")

    names = filtered.names()
    tf = textfeat.tfidf(names)
    sim = textfeat.cosine_similarity(tf)
    dist = textfeat.cosine_distance(sim)
    # leaves are their own cluster at distance 0 even for zero-feature names
    np.fill_diagonal(dist, 0.0)

    dendro = cluster.single_linkage(dist)
    flat = cluster.cut(dendro, k)

    g = graph.build_graph(sim, names, threshold)
    part = graph.louvain(g, seed)
    lay = graph.layout_fr(g, seed=seed, iterations=iterations)
    cent = graph.community_centroids(lay, part)

    stats = analytics.stats_doc(analytics.summary_stats(filtered))
    tables = analytics.cluster_word_tables(filtered, flat, wordcloud_top_n)
    wordclouds = {
        "cluster_sizes": cluster.cluster_sizes(flat),
        "tables": [analytics.table_doc(t) for t in tables],
    }
    scatter = analytics.scatter_doc(analytics.scatter_points(filtered))

    return AtlasResult(
        model_count=n,
        cluster_count=k,
        community_count=part.community_count,
        stats=stats,
        newick=cluster.to_newick(dendro, names),
        tree=cluster.to_nested_json(dendro, names, filtered),
        graph=graph.export_graph_json(g, part, lay, cent, filtered),
        wordclouds=wordclouds,
        scatter=scatter,
    )
