"""Optional model-hub listing client; the pipeline itself runs from CSV alone."""

from __future__ import annotations

import time
from dataclasses import dataclass

import requests

from .corpus import Corpus, ModelRecord, assign_ranks, derive_readme_link, extract_params

DEFAULT_BASE_URL = "https://huggingface.co"
DEFAULT_TAG = "text-generation"


class FetchError(RuntimeError):
    """A page could not be retrieved after exhausting retries."""

    def __init__(self, page: int, message: str):
        super().__init__(f"page {page}: {message}")
        self.page = page


class PayloadError(ValueError):
    """The listing endpoint returned a malformed payload."""


@dataclass(frozen=True)
class FetchConfig:
    base_url: str = DEFAULT_BASE_URL
    page_size: int = 100
    max_pages: int | None = None
    retry_limit: int = 3
    backoff_initial: float = 500.0  # milliseconds
    request_timeout: float = 10000.0  # milliseconds

    def __post_init__(self):
        if self.page_size < 1:
            raise ValueError(f"page_size must be >= 1, got {self.page_size}")
        if self.retry_limit < 0:
            raise ValueError(f"retry_limit must be >= 0, got {self.retry_limit}")


@dataclass(frozen=True)
class RawListing:
    """One listing row as returned by the hub; numeric fields may be absent."""

    name: str
    link: str
    downloads: int | None
    likes: int | None


def _coerce_count(value, field: str) -> int | None:
    if value is None:
        return None
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise PayloadError(f"{field} must be a number, got {value!r}")
    n = int(value)
    if n < 0:
        raise PayloadError(f"{field} must be >= 0, got {value!r}")
    return n


def _parse_listing(item) -> RawListing:
    if not isinstance(item, dict):
        raise PayloadError(f"listing entry must be an object, got {type(item).__name__}")
    name = item.get("id") or item.get("name")
    if not isinstance(name, str) or not name:
        raise PayloadError(f"listing entry has no usable id: {item!r}")
    link = item.get("link") or f"{DEFAULT_BASE_URL}/{name}"
    return RawListing(
        name=name,
        link=link,
        downloads=_coerce_count(item.get("downloads"), "downloads"),
        likes=_coerce_count(item.get("likes"), "likes"),
    )


def _get_page(config: FetchConfig, tag: str, page: int) -> list:
    url = config.base_url.rstrip("/") + "/api/models"
    params = {"tag": tag, "page": page, "page_size": config.page_size}
    timeout = config.request_timeout / 1000.0
    last_error = "no attempt made"
    for attempt in range(config.retry_limit + 1):
        if attempt > 0:
            time.sleep(config.backoff_initial / 1000.0 * 2 ** (attempt - 1))
        try:
            resp = requests.get(url, params=params, timeout=timeout)
        except requests.RequestException as exc:
            last_error = str(exc)
            continue
        if resp.status_code == 429 or resp.status_code >= 500:
            last_error = f"HTTP {resp.status_code}"
            continue
        if resp.status_code != 200:
            raise FetchError(page, f"HTTP {resp.status_code}")
        try:
            payload = resp.json()
        except ValueError as exc:
            raise PayloadError(f"page {page}: invalid JSON ({exc})") from None
        if not isinstance(payload, list):
            raise PayloadError(f"page {page}: expected a JSON array")
        return payload
    raise FetchError(page, last_error)


def fetch_listings(config: FetchConfig, tag: str = DEFAULT_TAG) -> list[RawListing]:
    """Paged retrieval of models carrying the tag; page order is authoritative.

    Stops at the first short or empty page, or at ``max_pages``. Records
    missing likes or downloads are kept with the field absent.
    """
    listings: list[RawListing] = []
    page = 0
    while config.max_pages is None or page < config.max_pages:
        payload = _get_page(config, tag, page)
        if not payload:
            break
        listings.extend(_parse_listing(item) for item in payload)
        if len(payload) < config.page_size:
            break
        page += 1
    return listings


def snapshot(listings: list[RawListing], label: str) -> Corpus:
    """Turn raw listings into a ranked snapshot corpus.

    Applies name-based parameter inference and readme-link derivation to
    every listing; exact duplicate links keep the first occurrence.
    """
    records = []
    seen = set()
    for i, listing in enumerate(listings):
        link = listing.link.rstrip("/")
        if link in seen:
            continue
        seen.add(link)
        model_name = listing.name.rsplit("/", 1)[-1]
        records.append(
            ModelRecord(
                rank=i + 1,
                model_name=model_name,
                link=link,
                downloads=listing.downloads,
                likes=listing.likes,
                readme_link=derive_readme_link(link),
                params_millions=extract_params(model_name),
            )
        )
    return assign_ranks(Corpus(records=tuple(records), snapshot_label=label))
