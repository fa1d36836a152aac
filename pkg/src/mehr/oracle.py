"""Exhaustive enumeration of every maximal empty box of a small point set.

Every face of a maximal empty box lies on a point coordinate or on the domain
boundary, so only bounds from ``{0} | projection values | {1}`` need to be
tried. A box is maximal when none of its faces can be pushed one candidate
value outward without the box picking up a point.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import OracleSizeError
from .geometry import HyperRect, PointSet

MAX_POINTS = 12
MAX_DIMS = 3


@dataclass(frozen=True)
class OracleResult:
    rects: tuple[HyperRect, ...]
    max_volume: float
    bounds: frozenset[tuple[tuple[float, ...], tuple[float, ...]]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "bounds", frozenset((r.lower, r.upper) for r in self.rects))

    @property
    def count(self) -> int:
        return len(self.rects)

    @property
    def largest(self) -> tuple[HyperRect, ...]:
        return tuple(r for r in self.rects if r.volume == self.max_volume)

    def __contains__(self, rect: HyperRect) -> bool:
        return (rect.lower, rect.upper) in self.bounds


def enumerate_all_mehrs(ps: PointSet) -> OracleResult:
    if ps.n > MAX_POINTS or ps.k > MAX_DIMS:
        raise OracleSizeError(
            f"exhaustive enumeration is limited to n <= {MAX_POINTS} and k <= {MAX_DIMS}, "
            f"got n = {ps.n}, k = {ps.k}"
        )
    k = ps.k
    cands = [np.unique(np.concatenate(([0.0, 1.0], ps.points[:, d]))) for d in range(k)]
    sizes = [c.size for c in cands]
    # Axis 2d indexes the lower bound of dimension d, axis 2d+1 the upper bound.
    shape = tuple(s for s in sizes for _ in (0, 1))

    def along(d: int, arr: np.ndarray, axis_offset: int) -> np.ndarray:
        view = [1] * (2 * k)
        view[2 * d + axis_offset] = sizes[d]
        return arr.reshape(view)

    valid = np.ones(shape, dtype=bool)
    for d, c in enumerate(cands):
        valid &= along(d, c, 0) < along(d, c, 1)

    occupied = np.zeros(shape, dtype=bool)
    for p in ps.points:
        inside = np.ones(shape, dtype=bool)
        for d, c in enumerate(cands):
            inside &= (along(d, c, 0) < p[d]) & (p[d] < along(d, c, 1))
        occupied |= inside
    empty = valid & ~occupied

    maximal = empty.copy()
    for d in range(k):
        lo_axis, hi_axis = 2 * d, 2 * d + 1
        # Extending the lower face one candidate down keeps the box valid.
        grown = np.zeros(shape, dtype=bool)
        dst = [slice(None)] * (2 * k)
        src = [slice(None)] * (2 * k)
        dst[lo_axis], src[lo_axis] = slice(1, None), slice(None, -1)
        grown[tuple(dst)] = empty[tuple(src)]
        maximal &= ~grown

        grown = np.zeros(shape, dtype=bool)
        dst = [slice(None)] * (2 * k)
        src = [slice(None)] * (2 * k)
        dst[hi_axis], src[hi_axis] = slice(None, -1), slice(1, None)
        grown[tuple(dst)] = empty[tuple(src)]
        maximal &= ~grown

    rects = []
    for idx in zip(*np.nonzero(maximal)):
        lower = tuple(float(cands[d][idx[2 * d]]) for d in range(k))
        upper = tuple(float(cands[d][idx[2 * d + 1]]) for d in range(k))
        rects.append(HyperRect(lower, upper))
    rects.sort(key=lambda r: (-r.volume, r.lower, r.upper))
    return OracleResult(tuple(rects), rects[0].volume)
