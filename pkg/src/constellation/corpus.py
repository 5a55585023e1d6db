"""Snapshot dataset: record schema, CSV interchange, name-based parameter inference."""

from __future__ import annotations

import csv
import io
import math
import re
from dataclasses import dataclass, replace

CSV_HEADER = ("rank", "model_name", "link", "downloads", "likes", "ReadMeLink", "params_millions")

README_SUFFIX = "/raw/main/README.md"

_PARAMS_RE = re.compile(r"(\d+(\.\d+)?)(B|M|b|m)")

_ABSENT = ("", "NaN")


class SchemaError(ValueError):
    """The CSV header does not match the snapshot schema."""


class RowError(ValueError):
    """A CSV data row is malformed."""

    def __init__(self, line: int, message: str):
        super().__init__(f"row at line {line}: {message}")
        self.line = line


def derive_readme_link(link: str) -> str:
    """Readme URL for a model page link; trailing slashes are stripped first."""
    return link.rstrip("/") + README_SUFFIX


def extract_params(model_name: str) -> float | None:
    """Infer a parameter count in millions from digits+unit inside the name.

    The first match of ``(\\d+(\\.\\d+)?)(B|M|b|m)`` wins; B/b scales by
    1000, M/m by 1. Substrings like "8bit" match deliberately (the cheap
    pattern trades a few false positives for coverage). Returns None when
    nothing matches or the value is not a positive finite number.
    """
    m = _PARAMS_RE.search(model_name)
    if m is None:
        return None
    value = float(m.group(1))
    if m.group(3) in ("B", "b"):
        value *= 1000.0
    if not math.isfinite(value) or value <= 0:
        return None
    return value


@dataclass(frozen=True)
class ModelRecord:
    """One hub model's metadata row."""

    rank: int
    model_name: str
    link: str
    downloads: int | None
    likes: int | None
    readme_link: str
    params_millions: float | None

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        if not self.model_name:
            raise ValueError("model_name must be non-empty")
        if not self.link:
            raise ValueError("link must be non-empty")
        if self.downloads is not None and self.downloads < 0:
            raise ValueError(f"downloads must be >= 0, got {self.downloads}")
        if self.likes is not None and self.likes < 0:
            raise ValueError(f"likes must be >= 0, got {self.likes}")
        if self.params_millions is not None and not (
            math.isfinite(self.params_millions) and self.params_millions > 0
        ):
            raise ValueError(f"params_millions must be positive and finite, got {self.params_millions}")
        if self.readme_link != derive_readme_link(self.link):
            raise ValueError(f"readme_link {self.readme_link!r} does not derive from link {self.link!r}")


@dataclass(frozen=True)
class Corpus:
    """An ordered snapshot of model records.

    ``link`` is the unique key; model names may collide across orgs.
    Canonical snapshots are sorted by downloads descending with ranks
    1..n, which is what ``assign_ranks`` produces; intermediate corpora
    (freshly fetched, shuffled for tests) may be unordered.
    """

    records: tuple[ModelRecord, ...]
    snapshot_label: str = ""

    def __post_init__(self):
        seen = set()
        for r in self.records:
            if r.link in seen:
                raise ValueError(f"duplicate link {r.link!r}")
            seen.add(r.link)

    def __len__(self) -> int:
        return len(self.records)

    def names(self) -> list[str]:
        return [r.model_name for r in self.records]


def _parse_number(field: str, name: str, line: int) -> float | None:
    if field in _ABSENT:
        return None
    try:
        value = float(field)
    except ValueError:
        raise RowError(line, f"non-numeric {name} {field!r}") from None
    if math.isnan(value):
        return None
    return value


def parse_csv(data: bytes, snapshot_label: str = "") -> Corpus:
    """Parse snapshot CSV bytes into a Corpus.

    The header must match ``CSV_HEADER`` exactly. Empty fields and the
    literal ``NaN`` mean absent; float-formatted downloads/likes are
    truncated to integers.
    """
    text = data.decode("utf-8-sig")
    reader = csv.reader(io.StringIO(text, newline=""))
    header = next(reader, None)
    if header is None:
        raise SchemaError("empty file: missing header")
    for i, expected in enumerate(CSV_HEADER):
        if i >= len(header) or header[i] != expected:
            got = header[i] if i < len(header) else "<missing>"
            raise SchemaError(f"expected column {expected!r} at position {i + 1}, got {got!r}")
    if len(header) > len(CSV_HEADER):
        raise SchemaError(f"unexpected extra column {header[len(CSV_HEADER)]!r}")

    records = []
    links = set()
    for row in reader:
        if not row:
            continue
        line = reader.line_num
        if len(row) != len(CSV_HEADER):
            raise RowError(line, f"expected {len(CSV_HEADER)} fields, got {len(row)}")
        rank_f = _parse_number(row[0], "rank", line)
        if rank_f is None:
            raise RowError(line, "rank must be present")
        model_name = row[1]
        if not model_name:
            raise RowError(line, "empty model_name")
        link = row[2]
        downloads = _parse_number(row[3], "downloads", line)
        likes = _parse_number(row[4], "likes", line)
        readme_link = row[5]
        params = _parse_number(row[6], "params_millions", line)
        if link in links:
            raise RowError(line, f"duplicate link {link!r}")
        links.add(link)
        try:
            rec = ModelRecord(
                rank=int(rank_f),
                model_name=model_name,
                link=link,
                downloads=None if downloads is None else int(downloads),
                likes=None if likes is None else int(likes),
                readme_link=readme_link,
                params_millions=params,
            )
        except ValueError as exc:
            raise RowError(line, str(exc)) from None
        records.append(rec)
    return Corpus(records=tuple(records), snapshot_label=snapshot_label)


def write_csv(corpus: Corpus) -> bytes:
    """Serialize a Corpus to snapshot CSV bytes (inverse of parse_csv)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in corpus.records:
        writer.writerow(
            [
                r.rank,
                r.model_name,
                r.link,
                "" if r.downloads is None else r.downloads,
                "" if r.likes is None else r.likes,
                r.readme_link,
                "" if r.params_millions is None else repr(r.params_millions),
            ]
        )
    return buf.getvalue().encode("utf-8")


def filter_min_downloads(corpus: Corpus, threshold: int) -> Corpus:
    """Keep records with downloads present and >= threshold, re-ranked 1..m."""
    survivors = [r for r in corpus.records if r.downloads is not None and r.downloads >= threshold]
    return Corpus(
        records=tuple(replace(r, rank=i + 1) for i, r in enumerate(survivors)),
        snapshot_label=corpus.snapshot_label,
    )


def assign_ranks(corpus: Corpus) -> Corpus:
    """Stable-sort by downloads descending (absent last) and rank 1..n."""
    ordered = sorted(
        corpus.records,
        key=lambda r: (r.downloads is None, -(r.downloads if r.downloads is not None else 0)),
    )
    return Corpus(
        records=tuple(replace(r, rank=i + 1) for i, r in enumerate(ordered)),
        snapshot_label=corpus.snapshot_label,
    )
