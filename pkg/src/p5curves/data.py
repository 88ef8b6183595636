"""Loading of the shipped classification dataset."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path

SCHEMA = 1


def read_dataset(path: str | Path) -> dict:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if data.get("schema") != SCHEMA:
        raise OSError(f"{path}: expected schema {SCHEMA}, got {data.get('schema')!r}")
    return data


def default_path() -> Path:
    return Path(str(resources.files("p5curves") / "data" / "catalog.json"))


@lru_cache(maxsize=1)
def _default() -> dict:
    return read_dataset(default_path())


def load_dataset(path: str | Path | None = None) -> dict:
    """The dataset as nested dicts; treat the result as read-only."""
    return _default() if path is None else read_dataset(path)
