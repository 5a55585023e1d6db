"""Bundled data files."""

from importlib import resources
from pathlib import Path


def fixture_path() -> Path:
    """Path of the bundled 200-model snapshot fixture CSV."""
    return Path(resources.files(__name__) / "fixture_models.csv")
