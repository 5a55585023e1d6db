"""HTTP JSON API over the pipeline, with per-query caching and static UI assets."""

from __future__ import annotations

import json
import threading
from collections import OrderedDict
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .analytics import scatter_doc, scatter_points, stats_doc, summary_stats
from .corpus import Corpus, filter_min_downloads, parse_csv
from .pipeline import (
    DEFAULT_CLUSTERS,
    DEFAULT_ITERATIONS,
    DEFAULT_MIN_DOWNLOADS,
    DEFAULT_SEED,
    DEFAULT_THRESHOLD,
    BadClusterCountError,
    EmptySelectionError,
    compute_atlas,
)


class AtlasQuery(BaseModel):
    """Pipeline parameters exposed to the UI; also the cache key."""

    min_downloads: int = Field(default=DEFAULT_MIN_DOWNLOADS, ge=0)
    k: int = Field(default=DEFAULT_CLUSTERS, ge=1)
    threshold: float = Field(default=DEFAULT_THRESHOLD, ge=0.0, le=1.0)
    seed: int = Field(default=DEFAULT_SEED)

    def key(self) -> tuple:
        return (self.min_downloads, self.k, self.threshold, self.seed)


class _CorpusState:
    """Corpus snapshot tied to the file it came from.

    Reloads when the file changes; swaps are atomic (readers see the old
    or the new corpus, never a partial one). The bundle cache is keyed by
    query and dropped wholesale on reload.
    """

    def __init__(self, path: Path | None, cache_size: int):
        self._path = path
        self._cache_size = cache_size
        self._lock = threading.Lock()
        self._corpus: Corpus | None = None
        self._fingerprint: tuple | None = None
        self._cache: OrderedDict[tuple, bytes] = OrderedDict()
        self._inflight: dict[tuple, threading.Lock] = {}
        if path is not None and path.exists():
            self._reload()

    def _file_fingerprint(self) -> tuple | None:
        if self._path is None:
            return None
        try:
            st = self._path.stat()
        except OSError:
            return None
        return (st.st_mtime_ns, st.st_size)

    def _reload(self):
        # fingerprint first: if the file changes while we read it, the next
        # request sees a mismatch and reloads again
        fingerprint = self._file_fingerprint()
        data = self._path.read_bytes()
        corpus = parse_csv(data, snapshot_label=self._path.name)
        with self._lock:
            self._corpus = corpus
            self._fingerprint = fingerprint
            self._cache.clear()
            self._inflight.clear()

    def corpus(self) -> Corpus | None:
        if self._path is not None:
            current = self._file_fingerprint()
            if current is not None and current != self._fingerprint:
                try:
                    self._reload()
                except (ValueError, OSError):
                    # mid-write or broken snapshot: keep serving the last
                    # good corpus and retry on the next request
                    pass
        return self._corpus

    def cached(self, key: tuple) -> bytes | None:
        with self._lock:
            body = self._cache.get(key)
            if body is not None:
                self._cache.move_to_end(key)
            return body

    def store(self, key: tuple, body: bytes):
        with self._lock:
            self._cache[key] = body
            self._cache.move_to_end(key)
            while len(self._cache) > self._cache_size:
                self._cache.popitem(last=False)

    def flight_lock(self, key: tuple) -> threading.Lock:
        with self._lock:
            return self._inflight.setdefault(key, threading.Lock())


def create_app(
    corpus_path: Path | None,
    static_dir: Path | None = None,
    cache_size: int = 16,
    iterations: int = DEFAULT_ITERATIONS,
) -> FastAPI:
    app = FastAPI(title="constellation", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    state = _CorpusState(corpus_path, cache_size)

    def require_corpus() -> Corpus:
        corpus = state.corpus()
        if corpus is None:
            raise HTTPException(status_code=404, detail="no corpus loaded")
        return corpus

    @app.get("/healthz")
    async def healthz():
        return Response(content="ok", media_type="text/plain")

    @app.get("/api/stats")
    def api_stats(min_downloads: int = Query(default=0, ge=0)):
        corpus = require_corpus()
        filtered = filter_min_downloads(corpus, min_downloads)
        return stats_doc(summary_stats(filtered))

    @app.get("/api/scatter")
    def api_scatter(min_downloads: int = Query(default=0, ge=0)):
        corpus = require_corpus()
        filtered = filter_min_downloads(corpus, min_downloads)
        return scatter_doc(scatter_points(filtered))

    def compute_bundle_bytes(corpus: Corpus, query: AtlasQuery) -> bytes:
        try:
            result = compute_atlas(
                corpus,
                min_downloads=query.min_downloads,
                k=query.k,
                threshold=query.threshold,
                seed=query.seed,
                iterations=iterations,
            )
        except (EmptySelectionError, BadClusterCountError) as exc:
            raise HTTPException(status_code=409, detail=str(exc)) from None
        bundle = {
            "query": {
                "min_downloads": query.min_downloads,
                "k": query.k,
                "threshold": query.threshold,
                "seed": query.seed,
            },
            "computed_at": datetime.now(timezone.utc).isoformat(),
            "stats": result.stats,
            "tree": result.tree,
            "graph": result.graph,
            "wordclouds": result.wordclouds,
            "scatter": result.scatter,
        }
        return json.dumps(bundle, ensure_ascii=False).encode("utf-8")

    @app.post("/api/atlas")
    def api_atlas(query: AtlasQuery):
        corpus = require_corpus()
        key = query.key()
        body = state.cached(key)
        if body is None:
            # single-flight: concurrent identical queries compute once
            lock = state.flight_lock(key)
            with lock:
                body = state.cached(key)
                if body is None:
                    body = compute_bundle_bytes(corpus, query)
                    state.store(key, body)
        return Response(content=body, media_type="application/json")

    if static_dir is not None and static_dir.is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    else:

        @app.get("/")
        def index():
            return {
                "service": "constellation",
                "endpoints": ["/healthz", "/api/stats", "/api/scatter", "/api/atlas"],
            }

    return app
