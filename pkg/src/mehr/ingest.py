"""CSV loading, column cleaning and min-max scaling to the unit cube."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import ConfigurationError, DataError
from .geometry import PointSet

MISSING = frozenset({"", "na", "n/a", "nan", "null", "none", "?"})

NON_NUMERIC = "non-numeric"
CONSTANT = "constant"


def _is_missing(cell: str) -> bool:
    return cell.strip().lower() in MISSING


def _parse(cell: str) -> float | None:
    try:
        value = float(cell)
    except ValueError:
        return None
    return value if math.isfinite(value) else None


@dataclass(frozen=True)
class RawTable:
    columns: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]
    numeric: tuple[bool, ...]

    @property
    def n_rows(self) -> int:
        return len(self.rows)


@dataclass
class CleaningLog:
    rows_in: int
    columns_in: tuple[str, ...]
    dropped_columns: list[tuple[str, str]] = field(default_factory=list)
    dropped_rows: int = 0
    retained: tuple[str, ...] = ()

    @property
    def rows_used(self) -> int:
        return self.rows_in - self.dropped_rows


def load_csv(path: str | Path) -> RawTable:
    """Read a CSV file with a header row.

    A column counts as numeric when every non-missing cell parses as a finite
    real number.
    """
    path = Path(path)
    try:
        with path.open(newline="", encoding="utf-8") as fh:
            records = list(csv.reader(fh))
    except (OSError, UnicodeDecodeError) as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc
    except csv.Error as exc:
        raise DataError(f"malformed CSV in {path}: {exc}") from exc

    records = [r for r in records if r]
    if not records:
        raise DataError(f"{path} is empty; a header row is required")
    header = tuple(c.strip() for c in records[0])
    if len(set(header)) != len(header):
        raise DataError(f"{path} has duplicate column names")
    rows = []
    for lineno, record in enumerate(records[1:], start=2):
        if len(record) != len(header):
            raise DataError(f"{path}: row {lineno} has {len(record)} fields, header has {len(header)}")
        rows.append(tuple(record))

    numeric = tuple(
        all(_is_missing(r[j]) or _parse(r[j]) is not None for r in rows) for j in range(len(header))
    )
    return RawTable(header, tuple(rows), numeric)


def clean_and_normalize(raw: RawTable) -> tuple[PointSet, CleaningLog]:
    """Drop unusable columns and incomplete rows, then scale every column to [0, 1].

    Scaling uses the extrema of the rows that survive cleaning.
    """
    log = CleaningLog(rows_in=raw.n_rows, columns_in=raw.columns)
    keep = []
    for j, name in enumerate(raw.columns):
        if raw.numeric[j]:
            keep.append(j)
        else:
            log.dropped_columns.append((name, NON_NUMERIC))

    complete = [r for r in raw.rows if not any(_is_missing(r[j]) for j in keep)]
    log.dropped_rows = raw.n_rows - len(complete)
    data = np.array([[_parse(r[j]) for j in keep] for r in complete], dtype=np.float64).reshape(len(complete), len(keep))

    if len(complete):
        varying = []
        for i, j in enumerate(keep):
            if np.unique(data[:, i]).size < 2:
                log.dropped_columns.append((raw.columns[j], CONSTANT))
            else:
                varying.append(i)
        data = data[:, varying]
        keep = [keep[i] for i in varying]
    # Report drops in input column order.
    order = {name: j for j, name in enumerate(raw.columns)}
    log.dropped_columns.sort(key=lambda item: order[item[0]])

    if not keep:
        reasons = ", ".join(f"{name} ({why})" for name, why in log.dropped_columns) or "no columns"
        raise ConfigurationError(f"no usable numeric dimensions remain after cleaning: {reasons}")

    log.retained = tuple(raw.columns[j] for j in keep)
    if len(complete):
        lo = data.min(axis=0)
        hi = data.max(axis=0)
        scaled = np.clip((data - lo) / (hi - lo), 0.0, 1.0)
        scale = tuple(zip(lo.tolist(), hi.tolist()))
    else:
        scaled = data
        scale = ((0.0, 1.0),) * len(keep)
    return PointSet(scaled, dim_names=log.retained, dim_scale=scale), log


def load_points(path: str | Path) -> tuple[PointSet, CleaningLog]:
    return clean_and_normalize(load_csv(path))
