"""Tests the curvature-adapted sampling of parabolas."""
import pytest

from saltbox_roof.curve import CurveSpec, curvature, curve_rows
from saltbox_roof.family import Uniform
from saltbox_roof.roof import RoofParams, SaltboxRoof


def test_curve_spec():
    """Test the parabola and its curvature."""
    curve = CurveSpec()
    str(curve)  # test the string representation
    assert curve.x_m == -1
    assert curve.x_M == 0.2
    assert curve.vertex == 0
    assert curve.y(-1) == 1
    assert curve.y(0.2) == pytest.approx(0.04, abs=1e-15)
    assert curvature(0, curve) == 2.0
    assert curvature(1, curve) == pytest.approx(2 / 5 ** 1.5, abs=1e-15)
    assert CurveSpec(3, 2, 0).curvature(7) == 0
    assert CurveSpec(3, 2, 0).vertex is None
    assert CurveSpec(0, 0, -1).curvature(0) == -2.0


def test_curve_spec_dict():
    """Test the serialization of CurveSpec."""
    curve = CurveSpec(1, -2, 0.5, -3, 4)
    new_curve = CurveSpec.from_dict(curve.to_dict())
    assert new_curve.to_dict() == curve.to_dict()
    assert curve.duplicate().to_dict() == curve.to_dict()


def test_curve_rows():
    """Test the rows of a sampled curve."""
    curve = CurveSpec()
    dist = SaltboxRoof(0, 1, 0.5, 0.5)
    rows = curve_rows(curve, dist, 2)
    assert rows == [(-1, 1, curvature(-1, curve)), (0.2, curve.y(0.2), curvature(0.2, curve))]
    rows = curve_rows(curve, dist, 20)
    assert len(rows) == 20
    for x, y, k in rows:
        assert y == curve.y(x)
        assert k == curve.curvature(x)


def test_points_concentrate_at_vertex():
    """Test that a mode under the vertex puts more points where the curve bends."""
    curve = CurveSpec()
    roof = SaltboxRoof.from_params(RoofParams.from_unit(5 / 6, 0.75))
    roof_x = [row[0] for row in curve_rows(curve, roof, 20)]
    uniform_x = [row[0] for row in curve_rows(curve, Uniform(0, 1), 20)]

    def count(values, lo, hi):
        return len([x for x in values if lo <= x <= hi])

    assert count(roof_x, -0.1, 0.1) == 5
    assert count(uniform_x, -0.1, 0.1) == 3
    assert count(roof_x, -0.06, 0.06) == 3
    assert count(uniform_x, -0.06, 0.06) == 2
