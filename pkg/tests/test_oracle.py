import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from mehr import (
    HyperRect,
    OracleSizeError,
    PointSet,
    Projections,
    RandomSource,
    enumerate_all_mehrs,
    generate_rectangles,
    is_empty,
    is_maximal,
)

from .conftest import point_sets


def pairwise_mehrs(ps):
    """Slow second oracle: every empty candidate box not strictly inside another."""
    cands = [sorted({0.0, 1.0, *ps.points[:, d].tolist()}) for d in range(ps.k)]
    per_dim = [[(a, b) for a, b in itertools.combinations(c, 2)] for c in cands]
    empty = []
    for combo in itertools.product(*per_dim):
        rect = HyperRect(tuple(a for a, _ in combo), tuple(b for _, b in combo))
        if is_empty(rect, ps):
            empty.append(rect)
    return {r for r in empty if not any(o != r and o.contains_rect(r) for o in empty)}


def test_fig6_holes(fig6):
    result = enumerate_all_mehrs(fig6)
    assert result.count == 4
    assert result.max_volume == 0.25
    assert [r.lower[0] for r in result.rects] == [0.0, 0.25, 0.5, 0.75]


def test_no_points_only_unit_square():
    result = enumerate_all_mehrs(PointSet.empty(2))
    assert result.rects == (HyperRect.unit(2),)


def test_fig8(fig8):
    result = enumerate_all_mehrs(fig8)
    assert result.count == 18
    assert result.max_volume == pytest.approx(0.5, abs=1e-15)
    assert result.largest == (HyperRect((0.3, 0.0), (0.8, 1.0)),)
    assert set(result.rects) == pairwise_mehrs(fig8)


def test_size_guard():
    with pytest.raises(OracleSizeError):
        enumerate_all_mehrs(PointSet(np.random.default_rng(0).random((13, 2))))
    with pytest.raises(OracleSizeError):
        enumerate_all_mehrs(PointSet(np.random.default_rng(0).random((5, 4))))


@settings(max_examples=40, deadline=None)
@given(point_sets(max_n=6, max_k=2, grid=5))
def test_matches_pairwise_enumeration(ps):
    assert set(enumerate_all_mehrs(ps).rects) == pairwise_mehrs(ps)


@settings(max_examples=40, deadline=None)
@given(point_sets(max_n=12, max_k=3, grid=10))
def test_members_are_empty_maximal_and_incomparable(ps):
    result = enumerate_all_mehrs(ps)
    for r in result.rects:
        assert is_empty(r, ps) and is_maximal(r, ps)
    for a, b in itertools.combinations(result.rects, 2):
        assert not a.contains_rect(b) and not b.contains_rect(a)
    assert result.max_volume == max(r.volume for r in result.rects)


@pytest.mark.parametrize("strategy", [1, 2, 3])
@settings(max_examples=20, deadline=None)
@given(ps=point_sets(max_n=12, max_k=3))
def test_monte_carlo_output_is_subset(strategy, ps):
    oracle = enumerate_all_mehrs(ps)
    lower, upper, _ = generate_rectangles(ps, Projections.from_points(ps), strategy, RandomSource(0), 300)
    for lo, hi in zip(lower.tolist(), upper.tolist()):
        assert HyperRect(tuple(lo), tuple(hi)) in oracle


def test_count_grows_with_points():
    rng = np.random.default_rng(11)
    means = []
    for n in (3, 6, 9, 12):
        means.append(np.mean([enumerate_all_mehrs(PointSet(rng.random((n, 2)))).count for _ in range(20)]))
    assert means == sorted(means) and means[0] < means[-1]
