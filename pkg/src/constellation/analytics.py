"""Word frequencies, correlation and summary statistics, scatter extraction."""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass

from .cluster import FlatClustering
from .corpus import Corpus

_WORD_SPLIT = re.compile(r"[^a-z0-9]+")

GLOBAL_SCOPE = "global"


class UndefinedStatisticError(ValueError):
    """Pearson r needs two non-constant series of at least two pairs."""


@dataclass(frozen=True)
class WordFrequencyTable:
    """Word counts for one scope ("global" or a cluster label)."""

    scope: str
    entries: dict[str, int]


@dataclass(frozen=True)
class SummaryStats:
    model_count: int
    params_inferred_count: int
    params_inferred_fraction: float
    likes_downloads_pearson: float | None
    top_models: tuple[tuple[str, int], ...]


def word_tokens(name: str) -> list[str]:
    """Lowercase words: maximal runs of [a-z0-9] after lowercasing."""
    return [t for t in _WORD_SPLIT.split(name.lower()) if t]


def word_frequencies(names: list[str]) -> WordFrequencyTable:
    """Global word counts across all names; repeats within a name count each time."""
    counts: Counter = Counter()
    for name in names:
        counts.update(word_tokens(name))
    return WordFrequencyTable(scope=GLOBAL_SCOPE, entries=dict(counts))


def _top_entries(counts: Counter, top_n: int) -> dict[str, int]:
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return dict(ranked[:top_n])


def cluster_word_tables(corpus: Corpus, flat: FlatClustering, top_n: int) -> list[WordFrequencyTable]:
    """One table per cluster, truncated to the top_n words by count.

    Count ties rank lexicographically. Before truncation the per-cluster
    tables partition the global table.
    """
    if len(flat.labels) != len(corpus.records):
        raise ValueError("clustering does not cover the corpus")
    per_cluster: list[Counter] = [Counter() for _ in range(flat.k)]
    for record, label in zip(corpus.records, flat.labels):
        per_cluster[label].update(word_tokens(record.model_name))
    return [
        WordFrequencyTable(scope=str(label), entries=_top_entries(counts, top_n))
        for label, counts in enumerate(per_cluster)
    ]


def pearson(xs, ys) -> float:
    """Sample Pearson r between paired series; pairs with an absent side drop out."""
    pairs = [(x, y) for x, y in zip(xs, ys) if x is not None and y is not None]
    if len(pairs) < 2:
        raise UndefinedStatisticError(f"need at least 2 complete pairs, got {len(pairs)}")
    n = len(pairs)
    mx = sum(x for x, _ in pairs) / n
    my = sum(y for _, y in pairs) / n
    sxy = sum((x - mx) * (y - my) for x, y in pairs)
    sxx = sum((x - mx) ** 2 for x, _ in pairs)
    syy = sum((y - my) ** 2 for _, y in pairs)
    if sxx == 0.0 or syy == 0.0:
        raise UndefinedStatisticError("a constant series has no correlation")
    return sxy / math.sqrt(sxx * syy)


def scatter_points(corpus: Corpus) -> list[tuple[float, float, str]]:
    """(log10 downloads, log10 likes, name) for records where both are positive."""
    points = []
    for r in corpus.records:
        if r.downloads is None or r.likes is None or r.downloads <= 0 or r.likes <= 0:
            continue
        points.append((math.log10(r.downloads), math.log10(r.likes), r.model_name))
    return points


def summary_stats(corpus: Corpus, top_n: int = 10) -> SummaryStats:
    """Coverage of inferred parameters, likes/downloads correlation, top models."""
    n = len(corpus.records)
    inferred = sum(1 for r in corpus.records if r.params_millions is not None)
    try:
        r = pearson(
            [rec.downloads for rec in corpus.records],
            [rec.likes for rec in corpus.records],
        )
    except UndefinedStatisticError:
        r = None
    ranked = sorted(
        (rec for rec in corpus.records if rec.downloads is not None),
        key=lambda rec: -rec.downloads,
    )
    return SummaryStats(
        model_count=n,
        params_inferred_count=inferred,
        params_inferred_fraction=(inferred / n) if n else 0.0,
        likes_downloads_pearson=r,
        top_models=tuple((rec.model_name, rec.downloads) for rec in ranked[:top_n]),
    )


def stats_doc(stats: SummaryStats) -> dict:
    """JSON document for summary statistics."""
    return {
        "model_count": stats.model_count,
        "params_inferred_count": stats.params_inferred_count,
        "params_inferred_fraction": stats.params_inferred_fraction,
        "likes_downloads_pearson": stats.likes_downloads_pearson,
        "top_models": [{"name": name, "downloads": downloads} for name, downloads in stats.top_models],
    }


def table_doc(table: WordFrequencyTable) -> dict:
    """JSON document for one word table, entries ordered by count then word."""
    ordered = sorted(table.entries.items(), key=lambda kv: (-kv[1], kv[0]))
    return {"scope": table.scope, "entries": [{"word": w, "count": c} for w, c in ordered]}


def scatter_doc(points: list[tuple[float, float, str]]) -> dict:
    """JSON document for the log-log scatter."""
    return {
        "points": [
            {"log_downloads": x, "log_likes": y, "name": name} for x, y, name in points
        ]
    }
