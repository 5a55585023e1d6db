"""Command-line driver: fetch snapshots, build atlas artifacts, serve the API."""

from __future__ import annotations

import argparse
import json
import os
import socket
import sys
from pathlib import Path

from . import __version__
from .corpus import RowError, SchemaError, parse_csv, write_csv
from .hub import DEFAULT_TAG, FetchConfig, FetchError, PayloadError, fetch_listings, snapshot
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

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NETWORK = 2
EXIT_EMPTY_SELECTION = 3
EXIT_BAD_K = 4
EXIT_BIND = 5

DATA_ENV_VAR = "CONSTELLATION_DATA"

ARTIFACT_NAMES = ("stats.json", "tree.newick", "tree.json", "graph.json", "wordclouds.json", "scatter.json")


class _Parser(argparse.ArgumentParser):
    """argparse defaults to exit code 2 on usage errors; we reserve 2 for network."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="constellation", description="Model-name atlas toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    fetch = sub.add_parser("fetch", help="fetch a listing snapshot from a model hub", parents=[])
    fetch.add_argument("--base-url", default="https://huggingface.co")
    fetch.add_argument("--tag", default=DEFAULT_TAG)
    fetch.add_argument("--page-size", type=int, default=100)
    fetch.add_argument("--max-pages", type=int, default=None)
    fetch.add_argument("--retries", type=int, default=3)
    fetch.add_argument("--timeout", type=float, default=10000.0, help="per-request timeout in ms")
    fetch.add_argument("--label", default="", help="snapshot label stored with the corpus")
    fetch.add_argument("--out", required=True, help="output CSV path")

    atlas = sub.add_parser("atlas", help="compute atlas artifacts from a snapshot CSV")
    _add_pipeline_flags(atlas)
    atlas.add_argument("--out", default="atlas_out", help="output directory for artifact files")

    serve = sub.add_parser("serve", help="serve the atlas HTTP API")
    serve.add_argument("--input", default=None, help=f"snapshot CSV (or ${DATA_ENV_VAR})")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000, help="0 binds an ephemeral port")
    serve.add_argument("--static", default=None, help="directory of built UI assets to serve at /")
    serve.add_argument("--iterations", type=int, default=DEFAULT_ITERATIONS)
    return parser


def _add_pipeline_flags(p: argparse.ArgumentParser):
    p.add_argument("--input", default=None, help=f"snapshot CSV (or ${DATA_ENV_VAR})")
    p.add_argument("--min-downloads", type=int, default=DEFAULT_MIN_DOWNLOADS)
    p.add_argument("--clusters", type=int, default=DEFAULT_CLUSTERS)
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    p.add_argument("--iterations", type=int, default=DEFAULT_ITERATIONS)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)


def _resolve_input(parser: argparse.ArgumentParser, value: str | None) -> Path:
    path = value or os.environ.get(DATA_ENV_VAR)
    if not path:
        parser.error(f"no input CSV: pass --input or set ${DATA_ENV_VAR}")
    return Path(path)


def _json_bytes(doc: dict) -> bytes:
    return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def cmd_fetch(args) -> int:
    config = FetchConfig(
        base_url=args.base_url,
        page_size=args.page_size,
        max_pages=args.max_pages,
        retry_limit=args.retries,
        request_timeout=args.timeout,
    )
    try:
        listings = fetch_listings(config, args.tag)
    except (FetchError, PayloadError) as exc:
        print(f"fetch failed: {exc}", file=sys.stderr)
        return EXIT_NETWORK
    corpus = snapshot(listings, args.label)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_bytes(write_csv(corpus))
    print(f"wrote {len(corpus)} records to {out}")
    return EXIT_OK


def _load_corpus(parser, path: Path):
    try:
        return parse_csv(path.read_bytes(), snapshot_label=path.name)
    except FileNotFoundError:
        parser.error(f"input CSV not found: {path}")
    except (SchemaError, RowError) as exc:
        print(f"bad snapshot CSV: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE) from None


def cmd_atlas(args, parser) -> int:
    corpus = _load_corpus(parser, _resolve_input(parser, args.input))
    try:
        result = compute_atlas(
            corpus,
            min_downloads=args.min_downloads,
            k=args.clusters,
            threshold=args.threshold,
            seed=args.seed,
            iterations=args.iterations,
        )
    except EmptySelectionError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_EMPTY_SELECTION
    except BadClusterCountError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BAD_K

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "stats.json").write_bytes(_json_bytes(result.stats))
    (out / "tree.newick").write_bytes((result.newick + "\n").encode("utf-8"))
    (out / "tree.json").write_bytes(_json_bytes(result.tree))
    (out / "graph.json").write_bytes(_json_bytes(result.graph))
    (out / "wordclouds.json").write_bytes(_json_bytes(result.wordclouds))
    (out / "scatter.json").write_bytes(_json_bytes(result.scatter))
    print(
        f"{result.model_count} models, {result.cluster_count} clusters, "
        f"{result.community_count} communities -> {out}"
    )
    return EXIT_OK


def cmd_serve(args, parser) -> int:
    # imported lazily: fetch/atlas must not pay the server import cost
    import uvicorn

    from .server import create_app

    corpus_path = _resolve_input(parser, args.input)
    if not corpus_path.exists():
        parser.error(f"input CSV not found: {corpus_path}")
    static_dir = Path(args.static) if args.static else None

    try:
        probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((args.host, args.port))
        port = probe.getsockname()[1]
        probe.close()
    except OSError as exc:
        print(f"cannot bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        return EXIT_BIND

    app = create_app(corpus_path, static_dir=static_dir, iterations=args.iterations)
    print(f"serving on http://{args.host}:{port}", flush=True)
    uvicorn.run(app, host=args.host, port=port, log_level="warning")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help exits 0; usage errors exit 1 via _Parser.error
        return int(exc.code or 0)
    try:
        if args.command == "fetch":
            return cmd_fetch(args)
        if args.command == "atlas":
            return cmd_atlas(args, parser)
        if args.command == "serve":
            return cmd_serve(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    raise AssertionError(f"unhandled command {args.command!r}")


def entrypoint():  # console_scripts target
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
