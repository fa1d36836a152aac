import numpy as np
import pytest

from mehr import ContractViolation, HyperRect, PointSet, bounding_dimension_frequencies, extract_rule
from mehr.rules import format_number

from .conftest import FIG8_POINTS


def test_fig8_rule_in_original_units():
    ps = PointSet(FIG8_POINTS, dim_names=("x", "y"), dim_scale=((0.0, 10.0), (0.0, 10.0)))
    rule = extract_rule(HyperRect((0.3, 0.0), (0.8, 1.0)), ps)
    assert str(rule) == "x in [3.0, 8.0]"
    assert len(rule) == 1


def test_full_width_dimensions_can_be_listed():
    ps = PointSet(FIG8_POINTS, dim_names=("x", "y"), dim_scale=((0.0, 10.0), (0.0, 10.0)))
    rule = extract_rule(HyperRect((0.3, 0.0), (0.8, 1.0)), ps, include_full_width=True)
    assert str(rule) == "x in [3.0, 8.0] and y in [0.0, 10.0]"


def test_unit_cube_has_no_condition():
    rule = extract_rule(HyperRect.unit(2), PointSet.empty(2))
    assert len(rule) == 0
    assert str(rule) == "(no bounding dimension)"


def test_affine_mapping():
    ps = PointSet([[0.0], [1.0]], dim_names=("price",), dim_scale=((100.0, 200.0),))
    assert str(extract_rule(HyperRect((0.25,), (0.5,)), ps)) == "price in [125.0, 150.0]"


def test_dimension_mismatch():
    with pytest.raises(ContractViolation):
        extract_rule(HyperRect.unit(3), PointSet(FIG8_POINTS))


@pytest.mark.parametrize("value, text", [(3.0, "3.0"), (0.1 + 0.2, "0.3"), (-2.0, "-2.0"), (1e-20, "1e-20"), (1234.5678, "1234.5678")])
def test_format_number(value, text):
    assert format_number(value) == text


def test_bounding_frequencies():
    rects = [
        HyperRect((0.3, 0.0), (0.8, 1.0)),
        HyperRect((0.0, 0.4), (1.0, 0.9)),
        HyperRect((0.1, 0.1), (0.9, 0.6)),
        HyperRect((0.0, 0.0), (1.0, 1.0)),
    ]
    np.testing.assert_array_equal(bounding_dimension_frequencies(rects), [0.5, 0.5])


def test_bounding_frequencies_need_rectangles():
    with pytest.raises(ContractViolation):
        bounding_dimension_frequencies([])
