"""Seed rectangles from random query points and grow them to maximality.

This is the readable reference path. The compiled kernels in ``_kernels``
consume the random stream in exactly the same order, so for a given seed both
produce identical rectangles.

Random draw order (shared with the kernels):

* query point: one uniform per coordinate, redrawn while it hits a projection
  value exactly;
* shuffles: Fisher-Yates from the last slot down, one uniform per swap;
* a uniform choice among ``m`` items uses ``floor(u * m)``.
"""

from __future__ import annotations

import bisect
import enum
from typing import Callable, Sequence

import numpy as np

from .errors import ContractViolation
from .geometry import Direction, HyperRect, PointSet, Projections, blocking_limit


class ExpansionStrategy(enum.IntEnum):
    MAX_PER_DIMENSION = 1
    EQUAL_STEP_ROUNDS = 2
    RANDOM_AMOUNTS = 3


class RandomSource:
    """Seeded uniform stream on top of :class:`numpy.random.Generator`."""

    def __init__(self, seed: int | None = None):
        self.seed = seed
        self.generator = np.random.default_rng(seed)

    def random(self) -> float:
        return self.generator.random()

    def index(self, m: int) -> int:
        return min(int(self.random() * m), m - 1)

    def shuffle(self, items: list) -> list:
        for i in range(len(items) - 1, 0, -1):
            j = self.index(i + 1)
            items[i], items[j] = items[j], items[i]
        return items


# A (dimension, direction) pair is encoded as ``2 * dim + (1 if up else 0)``.
def _unslot(slot: int) -> tuple[int, Direction]:
    return slot // 2, Direction.UP if slot % 2 else Direction.DOWN


def _bound(rect: HyperRect, dim: int, direction: Direction) -> float:
    return rect.upper[dim] if direction is Direction.UP else rect.lower[dim]


def sample_query_point(proj: Projections, rng: RandomSource) -> tuple[float, ...]:
    q = []
    for values in proj.values:
        while True:
            u = rng.random()
            i = bisect.bisect_left(values, u)
            if i == len(values) or values[i] != u:
                break
        q.append(u)
    return tuple(q)


def seed_rectangle(q: Sequence[float], proj: Projections) -> HyperRect:
    """Box spanned by the projection values adjacent to ``q`` in each dimension."""
    lower, upper = [], []
    for x, values in zip(q, proj.values):
        i = bisect.bisect_left(values, x)
        j = bisect.bisect_right(values, x)
        if i != j:
            raise ContractViolation(f"query coordinate {x} coincides with a projection value")
        lower.append(float(values[i - 1]) if i > 0 else 0.0)
        upper.append(float(values[j]) if j < len(values) else 1.0)
    return HyperRect(tuple(lower), tuple(upper))


def _next_value(values: np.ndarray, current: float, direction: Direction) -> float:
    if direction is Direction.UP:
        i = bisect.bisect_right(values, current)
        return float(values[i]) if i < len(values) else 1.0
    i = bisect.bisect_left(values, current) - 1
    return float(values[i]) if i >= 0 else 0.0


def expand_max_per_dimension(rect: HyperRect, ps: PointSet, rng: RandomSource) -> HyperRect:
    """Push each bound straight to its limit, one dimension at a time."""
    for dim in rng.shuffle(list(range(rect.k))):
        for direction in rng.shuffle([Direction.DOWN, Direction.UP]):
            rect = rect.replace_bound(dim, direction, blocking_limit(rect, ps, dim, direction))
    return rect


def expand_equal_rounds(
    rect: HyperRect, ps: PointSet, rng: RandomSource, proj: Projections | None = None
) -> HyperRect:
    """Advance every unfrozen bound by one projection step per round."""
    if proj is None:
        proj = Projections.from_points(ps)
    active = list(range(2 * rect.k))
    while active:
        frozen = set()
        for slot in rng.shuffle(list(active)):
            dim, direction = _unslot(slot)
            limit = blocking_limit(rect, ps, dim, direction)
            step = _next_value(proj[dim], _bound(rect, dim, direction), direction)
            new = min(step, limit) if direction is Direction.UP else max(step, limit)
            rect = rect.replace_bound(dim, direction, new)
            if new == limit:
                frozen.add(slot)
        active = [s for s in active if s not in frozen]
    return rect


def _candidates(values: np.ndarray, current: float, limit: float, direction: Direction) -> list[float]:
    # Nearest first, the limit itself last.
    if direction is Direction.UP:
        i0 = bisect.bisect_right(values, current)
        i1 = bisect.bisect_left(values, limit)
        between = [float(v) for v in values[i0:i1]]
    else:
        i0 = bisect.bisect_right(values, limit)
        i1 = bisect.bisect_left(values, current)
        between = [float(v) for v in values[i0:i1][::-1]]
    return between + [limit]


def expand_random_amounts(
    rect: HyperRect, ps: PointSet, rng: RandomSource, proj: Projections | None = None
) -> HyperRect:
    """Move a random bound by a random number of projection steps until all are pinned."""
    if proj is None:
        proj = Projections.from_points(ps)
    active = list(range(2 * rect.k))
    while active:
        pick = rng.index(len(active))
        dim, direction = _unslot(active[pick])
        limit = blocking_limit(rect, ps, dim, direction)
        current = _bound(rect, dim, direction)
        if current != limit:
            options = _candidates(proj[dim], current, limit, direction)
            new = options[rng.index(len(options))]
            rect = rect.replace_bound(dim, direction, new)
            current = new
        if current == limit:
            active.pop(pick)
    return rect


_EXPANDERS: dict[ExpansionStrategy, Callable[..., HyperRect]] = {
    ExpansionStrategy.MAX_PER_DIMENSION: lambda r, ps, rng, proj: expand_max_per_dimension(r, ps, rng),
    ExpansionStrategy.EQUAL_STEP_ROUNDS: expand_equal_rounds,
    ExpansionStrategy.RANDOM_AMOUNTS: expand_random_amounts,
}


def create_mehr(
    ps: PointSet, proj: Projections, strategy: ExpansionStrategy | int, rng: RandomSource
) -> HyperRect:
    """Sample a query point, build its seed box and expand it."""
    seed = seed_rectangle(sample_query_point(proj, rng), proj)
    return _EXPANDERS[ExpansionStrategy(strategy)](seed, ps, rng, proj)
