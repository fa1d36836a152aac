"""Turn search results into JSON, rule listings or CSV."""

from __future__ import annotations

import csv
import io
import json

from .geometry import HyperRect, PointSet
from .ingest import CleaningLog
from .oracle import OracleResult
from .rules import bounding_dimension_frequencies, extract_rule, format_number
from .search import SearchReport


def _num(value: float) -> float:
    return float(format(float(value), ".12g"))


def _rect_entry(rect: HyperRect, ps: PointSet, include_full_width: bool) -> dict:
    return {
        "volume": _num(rect.volume),
        "bounds_normalized": [[_num(lo), _num(hi)] for lo, hi in zip(rect.lower, rect.upper)],
        "bounds_original": [
            [_num(ps.denormalize(d, lo)), _num(ps.denormalize(d, hi))]
            for d, (lo, hi) in enumerate(zip(rect.lower, rect.upper))
        ],
        "rule": str(extract_rule(rect, ps, include_full_width)),
    }


def _dataset_entry(ps: PointSet, log: CleaningLog) -> dict:
    return {
        "rows_in": log.rows_in,
        "rows_used": log.rows_used,
        "dims_in": len(log.columns_in),
        "dims_used": ps.k,
        "dimensions": list(ps.dim_names),
        "dropped": [{"column": name, "reason": why} for name, why in log.dropped_columns],
    }


def build_report(
    report: SearchReport, ps: PointSet, log: CleaningLog, *, runs: int = 1, include_full_width: bool = False
) -> dict:
    cfg = report.config
    top = report.top_set[: cfg.top_n]
    freqs = bounding_dimension_frequencies(top)
    return {
        "dataset": _dataset_entry(ps, log),
        "config": {
            "strategy": int(cfg.strategy),
            "stop": cfg.stop,
            "seed": cfg.seed,
            "runs": runs,
            "min_volume": _num(report.min_volume),
            "top_n": cfg.top_n,
            "max_iterations": cfg.resolved_max_iterations(ps.k),
        },
        "max": _rect_entry(report.best, ps, include_full_width),
        "top": [_rect_entry(r, ps, include_full_width) for r in top],
        "stats": {
            "generated": report.stats.generated,
            "too_small": report.stats.too_small,
            "before_best": report.stats.before_best,
            "improving_count": len(report.improving),
            "capped": report.stats.capped,
            "wall_ms": round(report.stats.wall_ms, 3),
        },
        "runs": [
            {"seed": seed, "max_volume": _num(best), "generated": generated, "before_best": before}
            for seed, best, generated, before in report.runs
        ],
        "bounding_frequencies": [
            {"dimension": name, "frequency": _num(f)} for name, f in zip(ps.dim_names, freqs.tolist())
        ],
    }


def build_oracle_report(result: OracleResult, ps: PointSet, log: CleaningLog, *, include_full_width: bool = False) -> dict:
    return {
        "dataset": _dataset_entry(ps, log),
        "oracle": {
            "count": result.count,
            "max_volume": _num(result.max_volume),
            "rectangles": [_rect_entry(r, ps, include_full_width) for r in result.rects],
        },
    }


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def to_rules(entries: list[dict]) -> str:
    lines = [f"{i}\tvolume={format_number(e['volume'])}\t{e['rule']}" for i, e in enumerate(entries, start=1)]
    return "\n".join(lines) + "\n"


def to_csv(entries: list[dict], ps: PointSet) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["rank", "volume"]
    for name in ps.dim_names:
        header += [f"{name}_low", f"{name}_high"]
    writer.writerow(header)
    for i, e in enumerate(entries, start=1):
        row = [i, format_number(e["volume"])]
        for lo, hi in e["bounds_original"]:
            row += [format_number(lo), format_number(hi)]
        writer.writerow(row)
    return buf.getvalue()
