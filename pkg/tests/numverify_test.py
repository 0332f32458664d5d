"""Tests the numerical routines used to check the closed forms."""
import math

import pytest

from saltbox_roof.errors import DomainViolation, NonFinite, NoConvergence, \
    BracketViolation, EmptySample
from saltbox_roof.family import Uniform, Triangular, LeftShed, RightShed, ShedFlat, \
    Skillion
from saltbox_roof.numverify import QuadratureResult, integrate, fd_derivative, \
    bisect_quantile, ks_statistic, moment_numeric, histogram
from saltbox_roof.roof import SaltboxRoof


def test_integrate():
    """Test adaptive quadrature on simple integrands."""
    result = integrate(lambda x: 1.0, 0, 1)
    assert isinstance(result, QuadratureResult)
    assert result.value == pytest.approx(1.0, abs=1e-15)
    assert result.error_estimate >= 0
    assert result.evaluations >= 3
    assert result.to_dict()['type'] == 'QuadratureResult'

    assert integrate(lambda x: 3 * x * x, 0, 1).value == pytest.approx(1.0, abs=1e-15)
    assert integrate(lambda x: x ** 3 - x, -2, 5).value == \
        pytest.approx((5 ** 4 - 2 ** 4) / 4 - (25 - 4) / 2, abs=1e-12)
    assert integrate(math.sin, 0, math.pi, tol=1e-10).value == \
        pytest.approx(2.0, abs=1e-9)
    assert integrate(lambda x: 5.0, 1, 1).value == 0


def test_integrate_breakpoints():
    """Test quadrature of the reference density split at its mode."""
    dist = SaltboxRoof(0, 1, 0.5, 0.5)
    result = integrate(dist.pdf, 0, 1, breakpoints=[0.5])
    assert result.value == pytest.approx(1.0, abs=1e-12)
    assert integrate(abs, -1, 2, breakpoints=[0, 5, -3]).value == \
        pytest.approx(2.5, abs=1e-14)


def test_integrate_errors():
    """Test the failures of the quadrature."""
    with pytest.raises(DomainViolation):
        integrate(lambda x: x, 1, 0)
    with pytest.raises(NonFinite):
        integrate(lambda x: 1 / x if x else float('inf'), 0, 1)
    with pytest.raises(NoConvergence):
        integrate(lambda x: math.sqrt(x), 0, 1, tol=1e-14, max_depth=3)


def test_fd_derivative():
    """Test the central finite difference."""
    assert fd_derivative(lambda x: x * x, 1, 1e-5) == pytest.approx(2.0, abs=1e-9)
    dist = SaltboxRoof(0, 1, 0.5, 0.5)
    assert fd_derivative(dist.cdf, 0.25, 1e-5) == pytest.approx(0.75, abs=1e-6)
    assert fd_derivative(lambda x: 4.0, 0.3, 1e-3) == 0
    with pytest.raises(DomainViolation):
        fd_derivative(math.sin, 0, 0)
    with pytest.raises(NonFinite):
        fd_derivative(lambda x: float('inf'), 0, 1e-3)


def test_bisect_quantile():
    """Test the inversion of cumulative functions by bisection."""
    uniform = Uniform(0, 1)
    assert bisect_quantile(uniform.cdf, 0.25, 0, 1, 1e-12) == \
        pytest.approx(0.25, abs=1e-12)
    dist = SaltboxRoof(0, 1, 0.5, 0.5)
    assert bisect_quantile(dist.cdf, 0.5, 0, 1, 1e-12) == \
        pytest.approx(2 - math.sqrt(2), abs=1e-12)
    assert bisect_quantile(dist.cdf, 0, 0, 1) == 0
    assert bisect_quantile(dist.cdf, 1, 0, 1) == 1
    with pytest.raises(BracketViolation):
        bisect_quantile(dist.cdf, 0.5, 0.8, 1)


def test_bisect_matches_closed_forms():
    """Test bisection against every closed-form quantile."""
    tol = 1e-12
    members = [SaltboxRoof(0, 1, 0.5, 0.5), SaltboxRoof(-3, 2, -1, 0.7),
               Uniform(2, 5), Triangular(0, 1, 0.25), LeftShed(0, 1),
               RightShed(0, 1), ShedFlat(0, 1, 0.5), Skillion(0, 1, 1.5)]
    for dist in members:
        for i in range(1, 20):
            u = i / 20
            x = bisect_quantile(dist.cdf, u, dist.a, dist.b, tol)
            assert x == pytest.approx(dist.quantile(u), abs=10 * tol)


def test_ks_statistic():
    """Test the Kolmogorov-Smirnov distance."""
    dist = SaltboxRoof(0, 1, 0.5, 0.5)
    n = 100
    samples = [dist.quantile((i - 0.5) / n) for i in range(1, n + 1)]
    assert ks_statistic(samples, dist.cdf) == pytest.approx(0.5 / n, abs=1e-12)
    assert ks_statistic([dist.median], dist.cdf) == pytest.approx(0.5, abs=1e-15)
    assert ks_statistic(list(reversed(samples)), dist.cdf) == \
        pytest.approx(0.5 / n, abs=1e-12)
    with pytest.raises(EmptySample):
        ks_statistic([], dist.cdf)


def test_moment_numeric():
    """Test raw moments by quadrature."""
    dist = SaltboxRoof(0, 1, 0.5, 0.5)
    assert moment_numeric(dist.pdf, 0, 1, 1, [0.5]) == pytest.approx(7 / 12, abs=1e-10)
    assert moment_numeric(dist.pdf, 0, 1, 2, [0.5]) == pytest.approx(19 / 48, abs=1e-10)
    assert moment_numeric(Uniform(0, 1).pdf, 0, 1, 1) == pytest.approx(0.5, abs=1e-15)
    with pytest.raises(DomainViolation):
        moment_numeric(dist.pdf, 0, 1, 3)


def test_histogram():
    """Test equal-width bin counts."""
    rows = histogram([0, 0.1, 0.5, 0.99, 1, 1.5, -0.2], 0, 1, 2)
    assert rows == [(0, 0.5, 2), (0.5, 1, 3)]
    rows = histogram([], 20, 45, 25)
    assert len(rows) == 25
    assert rows[-1][1] == 45
    assert sum(row[2] for row in rows) == 0
    with pytest.raises(AssertionError):
        histogram([1], 0, 1, 0)
