"""If/then rules describing empty boxes, and bounding-dimension statistics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ContractViolation
from .geometry import HyperRect, PointSet


def format_number(value: float) -> str:
    """12 significant digits, always with a decimal point or exponent."""
    text = format(float(value), ".12g")
    if text.lstrip("-").isdigit():
        text += ".0"
    return text


@dataclass(frozen=True)
class Condition:
    dim: int
    name: str
    low: float
    high: float

    def __str__(self) -> str:
        return f"{self.name} in [{format_number(self.low)}, {format_number(self.high)}]"


@dataclass(frozen=True)
class Rule:
    """Conjunction of per-dimension intervals, in original units, whose box holds no point."""

    conditions: tuple[Condition, ...]

    def __str__(self) -> str:
        if not self.conditions:
            return "(no bounding dimension)"
        return " and ".join(str(c) for c in self.conditions)

    def __len__(self) -> int:
        return len(self.conditions)


def _full_width(rect: HyperRect, dim: int) -> bool:
    return rect.lower[dim] == 0.0 and rect.upper[dim] == 1.0


def extract_rule(rect: HyperRect, ps: PointSet, include_full_width: bool = False) -> Rule:
    if rect.k != ps.k:
        raise ContractViolation(f"dimension mismatch: rectangle has {rect.k}, data has {ps.k}")
    conditions = []
    for d in range(rect.k):
        if not include_full_width and _full_width(rect, d):
            continue
        conditions.append(
            Condition(d, ps.dim_names[d], ps.denormalize(d, rect.lower[d]), ps.denormalize(d, rect.upper[d]))
        )
    return Rule(tuple(conditions))


def bounding_dimension_frequencies(rects: Sequence[HyperRect]) -> np.ndarray:
    """Fraction of rectangles that are narrower than ``[0, 1]`` in each dimension."""
    if not rects:
        raise ContractViolation("need at least one rectangle")
    k = rects[0].k
    if any(r.k != k for r in rects):
        raise ContractViolation("rectangles have inconsistent dimensions")
    lower = np.array([r.lower for r in rects])
    upper = np.array([r.upper for r in rects])
    return ((lower != 0.0) | (upper != 1.0)).mean(axis=0)
