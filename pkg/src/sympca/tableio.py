"""CSV ingestion/serialization for interval tables, and concept aggregation.

Interval cells use the bracket grammar ``[lo,hi]`` (whitespace tolerated,
scientific notation accepted). A second read-only layout with paired columns
``name.lo`` / ``name.hi`` is recognized for spreadsheet interoperability.
Files are UTF-8; LF and CRLF inputs are both accepted, output uses LF.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import DataError
from .intervals import IntervalMatrix

__all__ = [
    "ClassicTable",
    "parse_interval_csv",
    "write_interval_csv",
    "parse_classic_csv",
    "aggregate_classic",
]

_CELL_RE = re.compile(r"^\s*\[\s*([^,\[\]\s]+)\s*,\s*([^,\[\]\s]+)\s*\]\s*$")
_PAIR_RE = re.compile(r"^(.+)\.(lo|hi)$")


def _parse_number(text: str, where: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise DataError(f"malformed number {text!r} at {where}") from None
    if not np.isfinite(value):
        raise DataError(f"non-finite number {text!r} at {where}")
    return value


def _read_records(text: str) -> list[list[str]]:
    reader = csv.reader(io.StringIO(text, newline=""))
    records = [row for row in reader if row]
    if not records:
        raise DataError("empty input: no header row")
    return records


def _split_header(records: list[list[str]]) -> tuple[list[str], list[list[str]]]:
    header = records[0]
    if len(header) < 2:
        raise DataError("header must name at least one data column")
    return header[1:], records[1:]


def parse_interval_csv(text: str) -> IntervalMatrix:
    """Parse an interval table from CSV text.

    The header row names the columns; the first column of every record is
    the row label. Cells are ``[lo,hi]`` brackets, or plain numbers under a
    paired ``name.lo`` / ``name.hi`` header layout.

    Raises DataError for malformed cells (with row/column position),
    inverted bounds, ragged rows, or duplicate labels.
    """
    names, body = _split_header(_read_records(text))
    if all(_PAIR_RE.match(n) for n in names) and names:
        return _parse_paired(names, body)
    return _parse_bracketed(names, body)


def _parse_bracketed(cols: list[str], body: list[list[str]]) -> IntervalMatrix:
    row_labels: list[str] = []
    lo = np.zeros((len(body), len(cols)))
    hi = np.zeros((len(body), len(cols)))
    for i, record in enumerate(body):
        if len(record) != len(cols) + 1:
            raise DataError(
                f"ragged row {record[0]!r}: expected {len(cols) + 1} fields, "
                f"got {len(record)}"
            )
        label = record[0]
        row_labels.append(label)
        for j, cell in enumerate(record[1:]):
            where = f"(row {label!r}, column {cols[j]!r})"
            match = _CELL_RE.match(cell)
            if match is None:
                raise DataError(f"malformed interval cell {cell!r} at {where}")
            a = _parse_number(match.group(1), where)
            b = _parse_number(match.group(2), where)
            if a > b:
                raise DataError(f"lower bound exceeds upper bound at {where}")
            lo[i, j] = a
            hi[i, j] = b
    return IntervalMatrix(tuple(row_labels), tuple(cols), lo, hi)


def _parse_paired(names: list[str], body: list[list[str]]) -> IntervalMatrix:
    bases: list[str] = []
    slots: dict[str, dict[str, int]] = {}
    for j, name in enumerate(names):
        base, side = _PAIR_RE.match(name).groups()
        if base not in slots:
            bases.append(base)
            slots[base] = {}
        if side in slots[base]:
            raise DataError(f"duplicate column label: {name!r}")
        slots[base][side] = j
    for base in bases:
        if set(slots[base]) != {"lo", "hi"}:
            raise DataError(f"incomplete bound pair for column {base!r}")
    row_labels: list[str] = []
    lo = np.zeros((len(body), len(bases)))
    hi = np.zeros((len(body), len(bases)))
    for i, record in enumerate(body):
        if len(record) != len(names) + 1:
            raise DataError(
                f"ragged row {record[0]!r}: expected {len(names) + 1} fields, "
                f"got {len(record)}"
            )
        label = record[0]
        row_labels.append(label)
        for j, base in enumerate(bases):
            where = f"(row {label!r}, column {base!r})"
            a = _parse_number(record[1 + slots[base]["lo"]], where)
            b = _parse_number(record[1 + slots[base]["hi"]], where)
            if a > b:
                raise DataError(f"lower bound exceeds upper bound at {where}")
            lo[i, j] = a
            hi[i, j] = b
    return IntervalMatrix(tuple(row_labels), tuple(bases), lo, hi)


def _format_number(x: float) -> str:
    # repr of a float is the shortest string that parses back exactly
    return repr(float(x))


def write_interval_csv(table: IntervalMatrix) -> str:
    """Serialize to the bracket-cell CSV grammar; reparsing is exact."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([""] + list(table.cols))
    for i, label in enumerate(table.rows):
        cells = [
            f"[{_format_number(table.lo[i, j])},{_format_number(table.hi[i, j])}]"
            for j in range(len(table.cols))
        ]
        writer.writerow([label] + cells)
    return out.getvalue()


@dataclass(frozen=True, eq=False)
class ClassicTable:
    """Single-valued (classic) numeric table, optionally carrying one
    designated concept column as text for later aggregation.

    ``cols``/``values`` hold the numeric data columns only; the concept
    column, when designated, lives in ``concept``/``concept_labels``.
    """

    rows: tuple[str, ...]
    cols: tuple[str, ...]
    values: np.ndarray
    concept: str | None = None
    concept_labels: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=float)
        expected = (len(self.rows), len(self.cols))
        if values.shape != expected:
            raise DataError(
                f"value grid shape {values.shape} does not match labels {expected}"
            )
        if values.size and not np.all(np.isfinite(values)):
            raise DataError("classic table contains non-finite cells")
        if self.concept is not None and len(self.concept_labels) != len(self.rows):
            raise DataError("concept labels must cover every row")
        object.__setattr__(self, "rows", tuple(str(r) for r in self.rows))
        object.__setattr__(self, "cols", tuple(str(c) for c in self.cols))
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "concept_labels", tuple(self.concept_labels))

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape


def parse_classic_csv(text: str, concept: str | None = None) -> ClassicTable:
    """Parse a classic numeric CSV; ``concept`` names a column kept as text."""
    names, body = _split_header(_read_records(text))
    if len(set(names)) != len(names):
        raise DataError("duplicate column label in classic table header")
    concept_idx: int | None = None
    if concept is not None:
        if concept not in names:
            raise DataError(f"concept column {concept!r} not found")
        concept_idx = names.index(concept)
    data_cols = [n for j, n in enumerate(names) if j != concept_idx]
    row_labels: list[str] = []
    concept_labels: list[str] = []
    values = np.zeros((len(body), len(data_cols)))
    for i, record in enumerate(body):
        if len(record) != len(names) + 1:
            raise DataError(
                f"ragged row {record[0]!r}: expected {len(names) + 1} fields, "
                f"got {len(record)}"
            )
        row_labels.append(record[0])
        k = 0
        for j, cell in enumerate(record[1:]):
            if j == concept_idx:
                concept_labels.append(cell.strip())
                continue
            where = f"(row {record[0]!r}, column {names[j]!r})"
            values[i, k] = _parse_number(cell, where)
            k += 1
    return ClassicTable(
        tuple(row_labels),
        tuple(data_cols),
        values,
        concept=concept,
        concept_labels=tuple(concept_labels) if concept else (),
    )


def _label_from_number(x: float) -> str:
    text = repr(float(x))
    return text[:-2] if text.endswith(".0") else text


def aggregate_classic(table: ClassicTable, concept_col: str) -> IntervalMatrix:
    """Collapse a classic table into an interval table by a concept column.

    One output row per distinct concept value, in order of first appearance;
    each cell is the [min, max] of the group's values in that column. The
    concept column itself is excluded from the output.
    """
    if len(table.rows) == 0:
        raise DataError("cannot aggregate an empty table")
    if table.concept == concept_col:
        group_keys = list(table.concept_labels)
        data_cols = list(table.cols)
        data = table.values
    elif concept_col in table.cols:
        j = table.cols.index(concept_col)
        group_keys = [_label_from_number(v) for v in table.values[:, j]]
        keep = [k for k in range(len(table.cols)) if k != j]
        data_cols = [table.cols[k] for k in keep]
        data = table.values[:, keep]
    else:
        raise DataError(f"concept column {concept_col!r} not found")

    order: list[str] = []
    members: dict[str, list[int]] = {}
    for i, key in enumerate(group_keys):
        if key not in members:
            order.append(key)
            members[key] = []
        members[key].append(i)

    lo = np.zeros((len(order), len(data_cols)))
    hi = np.zeros((len(order), len(data_cols)))
    for g, key in enumerate(order):
        block = data[members[key], :]
        lo[g] = block.min(axis=0)
        hi[g] = block.max(axis=0)
    return IntervalMatrix(tuple(order), tuple(data_cols), lo, hi)
