"""Loader for the packaged static data documents."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources


@lru_cache(maxsize=None)
def load(name: str) -> dict:
    path = resources.files(__package__).joinpath("data").joinpath(name)
    with path.open("r", encoding="utf-8") as fh:
        return json.load(fh)


def tables() -> dict:
    return load("tables.json")


def fixtures() -> dict:
    return load("fixtures.json")
