"""Monte Carlo search loop, result ranking and report merging."""

from __future__ import annotations

import heapq
import statistics
import time
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import ConfigurationError, ContractViolation
from .expansion import ExpansionStrategy, RandomSource, create_mehr
from .geometry import HyperRect, PointSet, Projections

_MAX_BATCH = 4096


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of one search run.

    ``min_volume`` defaults to ``1/n``. ``max_iterations`` is a safety cap on the
    total number of generated rectangles and defaults to ``10 * stop * k``.
    """

    strategy: ExpansionStrategy = ExpansionStrategy.RANDOM_AMOUNTS
    stop: int = 1000
    seed: int = 0
    min_volume: float | None = None
    top_n: int = 100
    max_iterations: int | None = None

    def __post_init__(self):
        try:
            object.__setattr__(self, "strategy", ExpansionStrategy(self.strategy))
        except ValueError:
            raise ConfigurationError(f"unknown expansion strategy {self.strategy!r}") from None
        if self.stop < 1:
            raise ConfigurationError("stop must be at least 1")
        if self.top_n < 1:
            raise ConfigurationError("top_n must be at least 1")
        if self.min_volume is not None and not 0.0 <= self.min_volume <= 1.0:
            raise ConfigurationError("min_volume must lie in [0, 1]")
        if self.max_iterations is not None and self.max_iterations < 1:
            raise ConfigurationError("max_iterations must be at least 1")

    def resolved_min_volume(self, n: int) -> float:
        if self.min_volume is not None:
            return self.min_volume
        return 1.0 / n if n else 0.0

    def resolved_max_iterations(self, k: int) -> int:
        if self.max_iterations is not None:
            return self.max_iterations
        return 10 * self.stop * k


@dataclass
class SearchStats:
    generated: int = 0
    too_small: int = 0
    before_best: int = 0
    wall_ms: float = 0.0
    capped: bool = False


@dataclass
class SearchReport:
    config: SearchConfig
    min_volume: float
    improving: list[HyperRect] = field(default_factory=list)
    top_set: list[HyperRect] = field(default_factory=list)
    stats: SearchStats = field(default_factory=SearchStats)
    # One (seed, max volume, generated, before_best) entry per merged run.
    runs: list[tuple[int, float, int, int]] = field(default_factory=list)

    @property
    def best(self) -> HyperRect:
        return self.improving[-1]

    @property
    def max_volume(self) -> float:
        return self.best.volume


def rank_key(rect: HyperRect) -> tuple:
    return (-rect.volume, rect.lower, rect.upper)


def rank_rects(rects) -> list[HyperRect]:
    """Distinct rectangles, largest volume first, ties by lower then upper bounds."""
    return sorted(set(rects), key=rank_key)


def rank(report: SearchReport) -> list[HyperRect]:
    return rank_rects(report.top_set)


class _TopSet:
    """Keeps the ``size`` best distinct rectangles seen so far."""

    def __init__(self, size: int):
        self.size = size
        self._heap: list[tuple] = []  # worst retained rectangle on top
        self._members: set[tuple] = set()

    def offer(self, vol: float, lower: np.ndarray, upper: np.ndarray) -> None:
        if len(self._heap) == self.size and vol < self._heap[0][0]:
            return
        key = (tuple(lower.tolist()), tuple(upper.tolist()))
        if key in self._members:
            return
        entry = (vol, tuple(-x for x in key[0]), tuple(-x for x in key[1]), key)
        if len(self._heap) < self.size:
            heapq.heappush(self._heap, entry)
            self._members.add(key)
        elif entry > self._heap[0]:
            dropped = heapq.heapreplace(self._heap, entry)
            self._members.discard(dropped[3])
            self._members.add(key)

    def ranked(self) -> list[HyperRect]:
        return rank_rects(HyperRect(lo, hi) for lo, hi in self._members)


class _Generator:
    """Produces rectangles in batches from one random stream."""

    def __init__(self, ps: PointSet, proj: Projections, strategy: ExpansionStrategy, rng: RandomSource, compiled: bool):
        self.ps, self.proj, self.strategy, self.rng = ps, proj, strategy, rng
        self.compiled = compiled
        if compiled:
            self._sorted = _kernels.sort_columns(ps.points)

    def batch(self, count: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        k = self.ps.k
        lower = np.empty((count, k))
        upper = np.empty((count, k))
        vols = np.empty(count)
        if self.compiled:
            padded, lengths = self.proj.padded()
            _kernels.generate(
                self.rng.generator, self.ps.points, *self._sorted, padded, lengths,
                int(self.strategy), count, lower, upper, vols,
            )
        else:
            for i in range(count):
                r = create_mehr(self.ps, self.proj, self.strategy, self.rng)
                lower[i], upper[i], vols[i] = r.lower, r.upper, r.volume
        return lower, upper, vols


def generate_rectangles(
    ps: PointSet, proj: Projections, strategy: ExpansionStrategy | int, rng: RandomSource, count: int,
    *, compiled: bool = True,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``count`` independent maximal empty rectangles as (lower, upper, volume) arrays."""
    return _Generator(ps, proj, ExpansionStrategy(strategy), rng, compiled).batch(count)


def find_mehrs(ps: PointSet, proj: Projections, cfg: SearchConfig, *, compiled: bool = True) -> SearchReport:
    """Run the Monte Carlo loop until ``cfg.stop`` consecutive large rectangles fail to improve.

    Only rectangles above ``min_volume`` advance the patience counter; a strict
    improvement of the maximum resets it. With ``compiled=False`` the reference
    Python expanders are used, which yields the same report for the same seed.
    """
    if ps.k < 1:
        raise ConfigurationError("cannot search a point set with no dimensions")
    if proj.k != ps.k:
        raise ContractViolation(f"projections have {proj.k} dimensions, data has {ps.k}")

    start = time.perf_counter()
    min_volume = cfg.resolved_min_volume(ps.n)
    report = SearchReport(config=cfg, min_volume=min_volume)
    stats = report.stats

    if ps.n == 0:
        cube = HyperRect.unit(ps.k)
        report.improving.append(cube)
        report.top_set.append(cube)
        stats.generated = 1
        stats.too_small = int(cube.volume <= min_volume)
        stats.wall_ms = (time.perf_counter() - start) * 1e3
        report.runs.append((cfg.seed, 1.0, 1, 0))
        return report

    cap = cfg.resolved_max_iterations(ps.k)
    gen = _Generator(ps, proj, cfg.strategy, RandomSource(cfg.seed), compiled)
    top = _TopSet(cfg.top_n)
    best = 0.0
    c = 0
    while c < cfg.stop and stats.generated < cap:
        # The loop cannot halt before ``stop - c`` more rectangles, so a batch of
        # that size never generates anything the serial loop would not.
        lower, upper, vols = gen.batch(min(cfg.stop - c, cap - stats.generated, _MAX_BATCH))
        for i, v in enumerate(vols.tolist()):
            stats.generated += 1
            if v <= min_volume:
                stats.too_small += 1
            if v > best:
                best = v
                report.improving.append(HyperRect(tuple(lower[i]), tuple(upper[i])))
                stats.before_best = stats.generated - 1
                c = 0
            elif v > min_volume:
                c += 1
            top.offer(v, lower[i], upper[i])
            if c >= cfg.stop or stats.generated >= cap:
                break

    stats.capped = c < cfg.stop
    report.top_set = top.ranked()
    stats.wall_ms = (time.perf_counter() - start) * 1e3
    report.runs.append((cfg.seed, best, stats.generated, stats.before_best))
    return report


def merge_reports(reports: list[SearchReport]) -> SearchReport:
    """Combine independent runs into one report.

    The improving sequence and ``before_best`` come from the run with the largest
    maximum (earliest run on ties); counters are summed and the top sets are
    re-ranked together.
    """
    if not reports:
        raise ContractViolation("nothing to merge")
    lead = reports[max(range(len(reports)), key=lambda i: (reports[i].max_volume, -i))]
    top_n = max(r.config.top_n for r in reports)
    return SearchReport(
        config=lead.config,
        min_volume=lead.min_volume,
        improving=list(lead.improving),
        top_set=rank_rects(rect for r in reports for rect in r.top_set)[:top_n],
        stats=SearchStats(
            generated=sum(r.stats.generated for r in reports),
            too_small=sum(r.stats.too_small for r in reports),
            before_best=lead.stats.before_best,
            wall_ms=sum(r.stats.wall_ms for r in reports),
            capped=any(r.stats.capped for r in reports),
        ),
        runs=[run for r in reports for run in r.runs],
    )


def before_best_summary(reports: list[SearchReport]) -> dict[str, float]:
    """Min, max, median and mean number of rectangles generated before each run's maximum."""
    counts = [run[3] for r in reports for run in r.runs]
    if not counts:
        raise ContractViolation("no runs to summarize")
    return {
        "min": min(counts),
        "max": max(counts),
        "median": statistics.median(counts),
        "mean": statistics.fmean(counts),
    }
