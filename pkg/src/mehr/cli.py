"""Command-line entry point: ``mehr --input data.csv``."""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor

from .errors import MehrError
from .geometry import Projections
from .ingest import load_points
from .oracle import enumerate_all_mehrs
from .report import build_oracle_report, build_report, to_csv, to_json, to_rules
from .search import SearchConfig, find_mehrs, merge_reports


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _fraction(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"expected a value in [0, 1], got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mehr",
        description="Find large maximal empty hyper-rectangles (holes) in numeric CSV data.",
    )
    p.add_argument("--input", required=True, help="CSV file with a header row")
    p.add_argument("--strategy", type=int, choices=(1, 2, 3), default=3,
                   help="expansion strategy: 1 max per dimension, 2 equal steps, 3 random amounts (default 3)")
    p.add_argument("--stop", type=_positive, default=1000,
                   help="consecutive non-improving large rectangles before a run halts (default 1000)")
    p.add_argument("--seed", type=int, default=0, help="random seed of the first run (default 0)")
    p.add_argument("--runs", type=_positive, default=1,
                   help="independent runs with seeds seed, seed+1, ...; results are merged (default 1)")
    p.add_argument("--min-volume", type=_fraction, default=None,
                   help="volume at or below which a rectangle is too small (default 1/n)")
    p.add_argument("--max-iterations", type=_positive, default=None,
                   help="hard cap on rectangles generated per run (default 10*stop*k)")
    p.add_argument("--top", type=_positive, default=100, help="number of largest distinct rectangles to keep (default 100)")
    p.add_argument("--format", choices=("json", "rules", "csv"), default="json")
    p.add_argument("--include-full-width", action="store_true",
                   help="list dimensions spanning the whole range in rules")
    p.add_argument("--jobs", type=_positive, default=1, help="runs executed concurrently (default 1)")
    p.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)
    return p


def _emit(doc: dict, entries: list[dict], fmt: str, ps) -> str:
    if fmt == "json":
        return to_json(doc)
    if fmt == "rules":
        return to_rules(entries)
    return to_csv(entries, ps)


def run_cli(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        ps, log = load_points(args.input)
        if args.oracle:
            doc = build_oracle_report(enumerate_all_mehrs(ps), ps, log, include_full_width=args.include_full_width)
            entries = doc["oracle"]["rectangles"][: args.top]
        else:
            proj = Projections.from_points(ps)
            configs = [
                SearchConfig(
                    strategy=args.strategy,
                    stop=args.stop,
                    seed=args.seed + i,
                    min_volume=args.min_volume,
                    top_n=args.top,
                    max_iterations=args.max_iterations,
                )
                for i in range(args.runs)
            ]
            with ThreadPoolExecutor(max_workers=args.jobs) as pool:
                reports = list(pool.map(lambda cfg: find_mehrs(ps, proj, cfg), configs))
            report = reports[0] if len(reports) == 1 else merge_reports(reports)
            doc = build_report(report, ps, log, runs=args.runs, include_full_width=args.include_full_width)
            entries = doc["top"]
        sys.stdout.write(_emit(doc, entries, args.format, ps))
    except MehrError as exc:
        print(f"mehr: error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run_cli())
