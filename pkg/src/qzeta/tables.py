"""Reference polynomials in n transcribed from published tables."""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .exact_core import UniPoly
from .zeta_values.fit import NPoly

__all__ = ["load_entries", "reference_entries", "find_reference", "entry_poly"]


def load_entries(path: str | Path) -> list[dict]:
    """Entries from a fixture file holding one entry or ``{"entries": [...]}``."""
    data = json.loads(Path(path).read_text())
    if isinstance(data, dict) and "entries" in data:
        return list(data["entries"])
    if isinstance(data, list):
        return data
    return [data]


@lru_cache(maxsize=None)
def _builtin() -> tuple:
    text = resources.files("qzeta").joinpath("data/reference_tables.json").read_text()
    return tuple(json.loads(text)["entries"])


def reference_entries() -> list[dict]:
    return [dict(e) for e in _builtin()]


def entry_poly(entry: dict) -> NPoly:
    """The entry's polynomial; prefers the expanded list, else the factors."""
    if "expanded" in entry:
        return NPoly(UniPoly(Fraction(c) for c in entry["expanded"]))
    return NPoly.from_factors(Fraction(entry["scale"]), entry["factors"])


def find_reference(m: int, s: int, star: bool, entries=None) -> dict | None:
    for e in (reference_entries() if entries is None else entries):
        if e["m"] == m and e["s"] == s and bool(e.get("star", True)) == star:
            return e
    return None
