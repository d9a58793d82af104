"""Bundled example data."""

from __future__ import annotations

from importlib import resources

from .intervals import IntervalMatrix
from .tableio import parse_interval_csv

__all__ = ["load_oils_table"]


def load_oils_table() -> IntervalMatrix:
    """The classic oils-and-fats benchmark: 8 classes of oil described by
    four interval variables (specific gravity GRA, freezing point FRE,
    iodine value IOD, saponification SAP)."""
    text = resources.files("sympca").joinpath("data/oils.csv").read_text("utf-8")
    return parse_interval_csv(text)
