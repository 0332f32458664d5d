"""Tests the closed forms of the degenerate roof distributions."""
import math

import pytest

from saltbox_roof.errors import DomainViolation
from saltbox_roof.family import Uniform, Triangular, LeftShed, RightShed, ShedFlat, \
    Skillion, roof_family, family_from_dict
from saltbox_roof.kind import RoofShapeKind
from saltbox_roof.numverify import integrate, moment_numeric
from saltbox_roof.roof import RoofParams, SaltboxRoof, c_limit


def _members():
    """Get one member of each family with a kink location for quadrature."""
    return [
        (Uniform(2, 5), []),
        (Triangular(0, 1, 0.25), [0.25]),
        (Triangular(-4, 6, 1), [1]),
        (LeftShed(0, 1), []),
        (RightShed(-2, 3), []),
        (ShedFlat(0, 1, 0.5), [0.5]),
        (ShedFlat(10, 14, 11), [11]),
        (Skillion(0, 1, 1.5), []),
        (Skillion(1, 3, 0.8), [])
    ]


def test_uniform():
    """Test the Uniform closed forms."""
    dist = Uniform(2, 5)
    str(dist)  # test the string representation
    assert dist.kind == RoofShapeKind.UNIFORM
    assert dist.pdf(3) == pytest.approx(1 / 3, abs=1e-15)
    assert dist.pdf(6) == 0
    assert dist.cdf(3.5) == 0.5
    assert dist.quantile(0.5) == 3.5
    assert dist.h_r == pytest.approx(1 / 3, abs=1e-15)


def test_triangular():
    """Test the Triangular closed forms."""
    dist = Triangular(0, 1, 0.25)
    assert dist.quantile(0.25) == pytest.approx(0.25, abs=1e-15)
    assert dist.cdf(0.25) == pytest.approx(0.25, abs=1e-15)
    assert dist.pdf(0.25) == 2
    assert dist.mean == pytest.approx(1.25 / 3, abs=1e-15)


def test_sheds():
    """Test the LeftShed and RightShed closed forms."""
    left = LeftShed(0, 1)
    assert left.cdf(0.5) == 0.25
    assert left.pdf(1) == 2
    assert left.quantile(1) == 1

    right = RightShed(0, 1)
    assert right.pdf(0.25) == 1.5
    assert right.cdf(0.5) == 0.75
    assert right.quantile(0) == 0
    assert right.quantile(0.75) == 0.5


def test_shed_flat():
    """Test the ShedFlat closed forms."""
    dist = ShedFlat(0, 1, 0.5)
    assert dist.h_p == pytest.approx(4 / 3, abs=1e-15)
    assert dist.h_r == 1
    assert dist.cdf(0.5) == pytest.approx(1 / 3, abs=1e-15)
    assert dist.pdf(0.75) == dist.h_p
    assert dist.quantile(1 / 3) == pytest.approx(0.5, abs=1e-12)


def test_skillion():
    """Test the Skillion closed forms."""
    dist = Skillion(0, 1, 1.5)
    assert dist.h_b == pytest.approx(0.5, abs=1e-15)
    assert dist.pdf(0.4) == pytest.approx(1.1, abs=1e-15)
    assert dist.cdf(1) == 1
    assert dist.quantile(0.5) == pytest.approx((3 - math.sqrt(5)) / 2, abs=1e-12)
    with pytest.raises(DomainViolation) as e:
        Skillion(0, 1, 2.5)
    assert e.value.clause == 'h_c range'
    with pytest.raises(DomainViolation):
        Skillion(0, 1, 0.5)


def test_skillion_range_limits():
    """Test that the ends of the Skillion height range reproduce other members."""
    low, uniform = Skillion(0, 2, 0.5), Uniform(0, 2)
    high, right = Skillion(0, 2, 1.0), RightShed(0, 2)
    for i in range(1001):
        x = 2 * i / 1000
        u = i / 1000
        assert low.pdf(x) == pytest.approx(uniform.pdf(x), abs=1e-9)
        assert low.quantile(u) == pytest.approx(uniform.quantile(u), abs=1e-9)
        assert high.pdf(x) == pytest.approx(right.pdf(x), abs=1e-9)
        assert high.cdf(x) == pytest.approx(right.cdf(x), abs=1e-9)


def test_normalization_and_round_trip():
    """Test that each member integrates to one and inverts its cdf."""
    for dist, kinks in _members():
        result = integrate(dist.pdf, dist.a, dist.b, breakpoints=kinks)
        assert result.value == pytest.approx(1.0, abs=1e-10)
        for i in range(1001):
            u = i / 1000
            assert abs(dist.cdf(dist.quantile(u)) - u) <= 1e-9
        assert dist.quantile(0) == dist.a
        assert dist.quantile(1) == dist.b


def test_moments_match_quadrature():
    """Test the closed-form mean and variance of each member."""
    for dist, kinks in _members():
        mean = moment_numeric(dist.pdf, dist.a, dist.b, 1, kinks)
        second = moment_numeric(dist.pdf, dist.a, dist.b, 2, kinks)
        assert dist.mean == pytest.approx(mean, abs=1e-8)
        assert dist.variance == pytest.approx(second - mean * mean, abs=1e-8)


def test_limit_consistency():
    """Test that the Saltbox-Roof converges to each member on the domain edges."""
    rho = 0.4
    pairs = [
        (RoofParams.from_unit(0, 0), Uniform(0, 1)),
        (RoofParams.from_unit(0.3, 1), Triangular(0, 1, 0.3)),
        (RoofParams.from_unit(0, 1), RightShed(0, 1)),
        (RoofParams.from_unit(1, 1), LeftShed(0, 1)),
        (RoofParams.from_unit(c_limit(rho), rho), ShedFlat(0, 1, c_limit(rho))),
        (RoofParams.from_unit(0, rho), Skillion(0, 1, 1 + rho))
    ]
    for params, member in pairs:
        dist = SaltboxRoof.from_params(params)
        assert dist.kind == member.kind
        for i in range(1001):
            x = u = i / 1000
            assert dist.pdf(x) == pytest.approx(member.pdf(x), abs=1e-9)
            assert dist.cdf(x) == pytest.approx(member.cdf(x), abs=1e-9)
            assert dist.quantile(u) == pytest.approx(member.quantile(u), abs=1e-9)
        assert dist.mean == pytest.approx(member.mean, abs=1e-12)
        assert dist.variance == pytest.approx(member.variance, abs=1e-12)


def test_roof_family():
    """Test the creation of members from their kind."""
    assert isinstance(roof_family('Triangular', 0, 1, c=0.5), Triangular)
    assert isinstance(roof_family('LeftShed', 0, 1), LeftShed)
    assert roof_family('Skillion', 0, 1, h_c=1.2).h_c == 1.2
    with pytest.raises(DomainViolation):
        roof_family('Saltbox', 0, 1)
    with pytest.raises(DomainViolation):
        roof_family('ShedFlat', 0, 1)
    with pytest.raises(DomainViolation):
        roof_family('Skillion', 0, 1)


def test_dict_methods():
    """Test the serialization of members to dictionaries."""
    for dist, _ in _members():
        new_dist = family_from_dict(dist.to_dict())
        assert new_dist.to_dict() == dist.to_dict()
        assert dist.duplicate().to_dict() == dist.to_dict()
    with pytest.raises(ValueError):
        family_from_dict({'type': 'Saltbox', 'a': 0, 'b': 1})
