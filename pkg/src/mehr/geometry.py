"""Point sets, projections and axis-aligned boxes in the normalized unit cube.

Everything here works on exact stored coordinates. Containment is strict, so
a point lying on a face of a box never makes that box non-empty.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import ConfigurationError, ContractViolation


class Direction(str, enum.Enum):
    DOWN = "down"
    UP = "up"


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class PointSet:
    """An ``n x k`` matrix of coordinates in ``[0, 1]``.

    ``dim_scale`` holds the ``(orig_min, orig_max)`` pair of every dimension so
    that bounds can be mapped back to original units. Duplicate rows are kept.
    """

    points: np.ndarray
    dim_names: tuple[str, ...] = ()
    dim_scale: tuple[tuple[float, float], ...] = ()

    def __post_init__(self):
        pts = np.array(self.points, dtype=np.float64, copy=True)
        if pts.ndim != 2:
            raise ContractViolation(f"points must be a 2-D array, got shape {pts.shape}")
        n, k = pts.shape
        if k < 1:
            raise ConfigurationError("a point set needs at least one dimension")
        if n and (np.isnan(pts).any() or pts.min() < 0.0 or pts.max() > 1.0):
            raise ContractViolation("coordinates must lie in [0, 1]")
        if n:
            for d in range(k):
                if np.unique(pts[:, d]).size < 2:
                    raise ContractViolation(f"dimension {d} has fewer than 2 distinct values")

        names = tuple(self.dim_names) or tuple(f"x{d}" for d in range(k))
        scale = tuple((float(lo), float(hi)) for lo, hi in self.dim_scale) or ((0.0, 1.0),) * k
        if len(names) != k or len(scale) != k:
            raise ContractViolation("dim_names and dim_scale must have one entry per dimension")
        for lo, hi in scale:
            if not lo < hi:
                raise ContractViolation(f"dim_scale needs orig_min < orig_max, got ({lo}, {hi})")

        object.__setattr__(self, "points", _readonly(np.ascontiguousarray(pts)))
        object.__setattr__(self, "dim_names", names)
        object.__setattr__(self, "dim_scale", scale)

    @classmethod
    def empty(cls, k: int) -> PointSet:
        return cls(np.empty((0, k)))

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def k(self) -> int:
        return self.points.shape[1]

    def denormalize(self, dim: int, value: float) -> float:
        lo, hi = self.dim_scale[dim]
        return lo + value * (hi - lo)


@dataclass(frozen=True, eq=False)
class Projections:
    """Sorted distinct coordinate values of every dimension."""

    values: tuple[np.ndarray, ...]
    _padded: tuple[np.ndarray, np.ndarray] = field(init=False, repr=False)

    def __post_init__(self):
        vals = []
        for d, v in enumerate(self.values):
            a = np.array(v, dtype=np.float64).ravel()
            if a.size > 1 and not np.all(np.diff(a) > 0):
                raise ContractViolation(f"projection {d} is not strictly increasing")
            vals.append(_readonly(a))
        if not vals:
            raise ContractViolation("projections need at least one dimension")
        object.__setattr__(self, "values", tuple(vals))

        # Fixed-width layout consumed by the compiled kernels.
        width = max(1, max(a.size for a in vals))
        padded = np.ones((len(vals), width))
        for d, a in enumerate(vals):
            padded[d, : a.size] = a
        lengths = np.array([a.size for a in vals], dtype=np.int64)
        object.__setattr__(self, "_padded", (_readonly(padded), _readonly(lengths)))

    @classmethod
    def from_points(cls, ps: PointSet) -> Projections:
        return cls(tuple(np.unique(ps.points[:, d]) for d in range(ps.k)))

    @property
    def k(self) -> int:
        return len(self.values)

    def padded(self) -> tuple[np.ndarray, np.ndarray]:
        return self._padded

    def __getitem__(self, dim: int) -> np.ndarray:
        return self.values[dim]


@dataclass(frozen=True)
class HyperRect:
    """Axis-aligned box ``[lower[d], upper[d]]`` in every dimension ``d``."""

    lower: tuple[float, ...]
    upper: tuple[float, ...]

    def __post_init__(self):
        lower = tuple(float(v) for v in self.lower)
        upper = tuple(float(v) for v in self.upper)
        if len(lower) != len(upper) or not lower:
            raise ContractViolation("lower and upper must be non-empty and of equal length")
        for d, (lo, hi) in enumerate(zip(lower, upper)):
            if not 0.0 <= lo < hi <= 1.0:
                raise ContractViolation(f"dimension {d}: need 0 <= lower < upper <= 1, got [{lo}, {hi}]")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def unit(cls, k: int) -> HyperRect:
        return cls((0.0,) * k, (1.0,) * k)

    @property
    def k(self) -> int:
        return len(self.lower)

    @property
    def volume(self) -> float:
        return math.prod(hi - lo for lo, hi in zip(self.lower, self.upper))

    def replace_bound(self, dim: int, direction: Direction | str, value: float) -> HyperRect:
        lower, upper = list(self.lower), list(self.upper)
        if Direction(direction) is Direction.UP:
            upper[dim] = value
        else:
            lower[dim] = value
        return HyperRect(tuple(lower), tuple(upper))

    def contains_rect(self, other: HyperRect) -> bool:
        return all(a <= c and d <= b for a, b, c, d in zip(self.lower, self.upper, other.lower, other.upper))


def _check_dims(rect: HyperRect, k: int) -> None:
    if rect.k != k:
        raise ContractViolation(f"dimension mismatch: rectangle has {rect.k}, data has {k}")


def _strictly_inside(rect: HyperRect, pts: np.ndarray) -> np.ndarray:
    lo = np.asarray(rect.lower)
    hi = np.asarray(rect.upper)
    return (pts > lo) & (pts < hi)


def contains_interior(rect: HyperRect, point: Sequence[float]) -> bool:
    """True iff ``point`` is strictly inside ``rect`` in every dimension."""
    if len(point) != rect.k:
        raise ContractViolation(f"dimension mismatch: rectangle has {rect.k}, point has {len(point)}")
    return all(lo < p < hi for lo, p, hi in zip(rect.lower, point, rect.upper))


def is_empty(rect: HyperRect, ps: PointSet) -> bool:
    _check_dims(rect, ps.k)
    if ps.n == 0:
        return True
    return not bool(_strictly_inside(rect, ps.points).all(axis=1).any())


def is_maximal(rect: HyperRect, ps: PointSet) -> bool:
    """True iff no face of an empty ``rect`` can move outward.

    A face is pinned either by the domain boundary or by a point that sits on
    it while being strictly inside every other dimension's interval.
    """
    if not is_empty(rect, ps):
        raise ContractViolation("is_maximal requires an empty rectangle")
    lower = np.asarray(rect.lower)
    upper = np.asarray(rect.upper)
    if ps.n == 0:
        return bool(np.all(lower == 0.0) and np.all(upper == 1.0))

    inside = _strictly_inside(rect, ps.points)
    others = (inside.sum(axis=1, keepdims=True) - inside) == ps.k - 1
    low_ok = (lower == 0.0) | (others & (ps.points == lower)).any(axis=0)
    high_ok = (upper == 1.0) | (others & (ps.points == upper)).any(axis=0)
    return bool(low_ok.all() and high_ok.all())


def volume(rect: HyperRect) -> float:
    return rect.volume


def blocking_limit(rect: HyperRect, ps: PointSet, dim: int, direction: Direction | str) -> float:
    """Farthest value one bound of an empty box can reach while staying empty.

    Only points strictly inside the box in every dimension other than ``dim``
    can block. Returns the domain boundary when nothing does.
    """
    _check_dims(rect, ps.k)
    up = Direction(direction) is Direction.UP
    if ps.n == 0:
        return 1.0 if up else 0.0

    inside = _strictly_inside(rect, ps.points)
    inside[:, dim] = True
    column = ps.points[inside.all(axis=1), dim]
    if up:
        column = column[column >= rect.upper[dim]]
        return float(column.min()) if column.size else 1.0
    column = column[column <= rect.lower[dim]]
    return float(column.max()) if column.size else 0.0
