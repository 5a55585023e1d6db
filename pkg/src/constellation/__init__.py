"""Atlas engine for model-hub metadata.

Turns a snapshot of model names and popularity counts into name-similarity
features, a single-linkage family tree, a community-partitioned similarity
graph with a force-directed layout, and word-frequency summaries. Driven by
the ``constellation`` CLI, exposed over an HTTP API, and explored through
the companion web UI.
"""

__version__ = "0.1.0"

from .analytics import (
    SummaryStats,
    WordFrequencyTable,
    cluster_word_tables,
    pearson,
    scatter_points,
    summary_stats,
    word_frequencies,
    word_tokens,
)
from .cluster import (
    Dendrogram,
    FlatClustering,
    cluster_sizes,
    cut,
    single_linkage,
    to_nested_json,
    to_newick,
)
from .corpus import (
    Corpus,
    ModelRecord,
    assign_ranks,
    derive_readme_link,
    extract_params,
    filter_min_downloads,
    parse_csv,
    write_csv,
)
from .graph import (
    CommunitySummary,
    Layout,
    Partition,
    SimilarityGraph,
    build_graph,
    community_centroids,
    export_graph_json,
    layout_fr,
    louvain,
    modularity,
)
from .hub import FetchConfig, RawListing, fetch_listings, snapshot
from .pipeline import AtlasResult, compute_atlas
from .textfeat import (
    NgramVocabulary,
    TfidfMatrix,
    build_vocabulary,
    cosine_distance,
    cosine_similarity,
    extract_ngrams,
    tfidf,
)

__all__ = [
    "__version__",
    "AtlasResult",
    "CommunitySummary",
    "Corpus",
    "Dendrogram",
    "FetchConfig",
    "FlatClustering",
    "Layout",
    "ModelRecord",
    "NgramVocabulary",
    "Partition",
    "RawListing",
    "SimilarityGraph",
    "SummaryStats",
    "TfidfMatrix",
    "WordFrequencyTable",
    "assign_ranks",
    "build_graph",
    "build_vocabulary",
    "cluster_sizes",
    "cluster_word_tables",
    "community_centroids",
    "compute_atlas",
    "cosine_distance",
    "cosine_similarity",
    "cut",
    "derive_readme_link",
    "export_graph_json",
    "extract_ngrams",
    "extract_params",
    "fetch_listings",
    "filter_min_downloads",
    "layout_fr",
    "louvain",
    "modularity",
    "parse_csv",
    "pearson",
    "scatter_points",
    "single_linkage",
    "snapshot",
    "summary_stats",
    "tfidf",
    "to_nested_json",
    "to_newick",
    "word_frequencies",
    "word_tokens",
    "write_csv",
]
