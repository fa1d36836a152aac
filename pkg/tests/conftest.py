from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from mehr import PointSet, Projections, RandomSource

DATA = Path(__file__).parent / "data"

FIG8_POINTS = [(0.3, 0.4), (0.8, 0.6), (0.1, 0.9), (0.9, 0.1), (0.0, 0.0), (1.0, 1.0)]


class ScriptedRandom(RandomSource):
    """Replays a fixed list of uniforms; fails loudly when it runs dry."""

    def __init__(self, values):
        super().__init__(0)
        self.values = list(values)

    def random(self):
        if not self.values:
            raise AssertionError("scripted random stream exhausted")
        return self.values.pop(0)


@pytest.fixture
def fig6():
    return PointSet(np.array([[0.0], [0.25], [0.5], [0.75], [1.0]]))


@pytest.fixture
def fig8():
    return PointSet(FIG8_POINTS)


@pytest.fixture
def iris_path():
    return DATA / "iris.csv"


def uniform_points(rng: np.random.Generator, n: int, k: int) -> PointSet:
    return PointSet(rng.random((n, k)))


@st.composite
def point_sets(draw, max_n=40, max_k=5, grid=None):
    """Random point sets; ``grid`` snaps coordinates so ties and duplicates occur."""
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, max_k))
    rng = np.random.default_rng(draw(st.integers(0, 2**32 - 1)))
    pts = rng.random((n, k))
    if grid:
        pts = np.round(pts * grid) / grid
    # Pin both ends of every axis so each dimension has two distinct values.
    pts[0] = 0.0
    pts[1] = 1.0
    return PointSet(pts)


def with_projections(ps: PointSet):
    return ps, Projections.from_points(ps)
