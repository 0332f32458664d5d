"""Tests the non-uniform spacing of points."""
import pytest

from saltbox_roof.errors import DomainViolation
from saltbox_roof.family import Uniform
from saltbox_roof.roof import RoofParams, SaltboxRoof
from saltbox_roof.spacing import SpacedPoints, unit_grid, spaced_points


def test_unit_grid():
    """Test the equally spaced probabilities."""
    assert unit_grid(2) == [0, 1]
    assert unit_grid(5) == [0, 0.25, 0.5, 0.75, 1]
    with pytest.raises(AssertionError):
        unit_grid(1)


def test_spaced_points():
    """Test points spread by a peaked distribution."""
    dist = SaltboxRoof.from_params(RoofParams.from_unit(0.7, 0.8))
    points = spaced_points(dist, 30)
    str(points)  # test the string representation
    assert isinstance(points, SpacedPoints)
    assert len(points) == 30
    assert points[0] == 0
    assert points[-1] == 1
    assert all(step > 0 for step in points.steps)
    for i, x in enumerate(points):
        assert dist.cdf(x) == pytest.approx(i / 29, abs=1e-9)

    # points crowd around the mode
    steps = points.steps
    assert min(steps) < 1 / 29 < max(steps)
    i_min = steps.index(min(steps))
    assert points[i_min] <= dist.c <= points[i_min + 1]
    assert points.to_dict()['type'] == 'SpacedPoints'


def test_spaced_points_interval():
    """Test the rescaling of the support onto another interval."""
    dist = SaltboxRoof(10, 20, 17, 0.8)
    points = spaced_points(dist, 30, -2, 2)
    assert points.x_m == -2
    assert points.x_M == 2
    assert points[0] == -2
    assert points[-1] == 2
    for i, x in enumerate(points):
        assert dist.cdf(10 + 10 * (x + 2) / 4) == pytest.approx(i / 29, abs=1e-9)

    two = spaced_points(dist, 2, -2, 2)
    assert list(two) == [-2, 2]
    with pytest.raises(DomainViolation):
        spaced_points(dist, 10, 1, 1)


def test_uniform_spacing():
    """Test that a uniform distribution gives equal steps."""
    points = spaced_points(Uniform(0, 1), 11, 0, 5)
    for step in points.steps:
        assert step == pytest.approx(0.5, abs=1e-12)


def test_spaced_points_checks():
    """Test the checks of SpacedPoints."""
    with pytest.raises(AssertionError):
        SpacedPoints([0, 0.5, 0.2], 0, 1)
    with pytest.raises(AssertionError):
        SpacedPoints([0, 1.5], 0, 1)
