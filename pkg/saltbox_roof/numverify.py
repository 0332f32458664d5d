# coding: utf-8
"""Numerical routines used to check the closed forms independently.

The routines only need plain callables, so they can be pointed at any pdf or
cdf of the package (or at anything else that is bounded and piecewise smooth).
"""
from __future__ import division

import math
import sys

from honeybee.typing import int_in_range

from .config import QUAD_MAX_DEPTH
from .errors import DomainViolation, NonFinite, NoConvergence, BracketViolation, \
    EmptySample
from .typing import finite_float, support_limits, tolerance

_ROUND_OFF = 4.0 * sys.float_info.epsilon


class QuadratureResult(object):
    """The outcome of an adaptive quadrature.

    Args:
        value: The estimate of the integral.
        error_estimate: The summed Richardson error estimate of all panels.
        evaluations: The number of times the integrand was called.

    Properties:
        * value
        * error_estimate
        * evaluations
    """
    __slots__ = ('_value', '_error_estimate', '_evaluations')

    def __init__(self, value, error_estimate, evaluations):
        self._value = value
        self._error_estimate = abs(error_estimate)
        self._evaluations = evaluations

    @property
    def value(self):
        """Get the estimate of the integral."""
        return self._value

    @property
    def error_estimate(self):
        """Get the non-negative error estimate."""
        return self._error_estimate

    @property
    def evaluations(self):
        """Get the number of integrand evaluations."""
        return self._evaluations

    def to_dict(self):
        """Get QuadratureResult as a dictionary."""
        return {
            'type': 'QuadratureResult',
            'value': self._value,
            'error_estimate': self._error_estimate,
            'evaluations': self._evaluations
        }

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'QuadratureResult [value: {}] [error: {}] [evaluations: {}]'.format(
            self._value, self._error_estimate, self._evaluations)


def _finite_value(f, x):
    value = f(x)
    if math.isnan(value) or math.isinf(value):
        raise NonFinite('Integrand is not finite at x={}. Got {}.'.format(x, value))
    return value


def _simpson_panel(f, lo, hi, tol, max_depth, counter):
    """Integrate f over one smooth panel by recursive Simpson subdivision."""
    f_lo, f_hi = _finite_value(f, lo), _finite_value(f, hi)
    mid = 0.5 * (lo + hi)
    f_mid = _finite_value(f, mid)
    counter[0] += 3
    whole = (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi)

    def refine(lo, hi, f_lo, f_mid, f_hi, whole, tol, depth):
        mid = 0.5 * (lo + hi)
        left_mid, right_mid = 0.5 * (lo + mid), 0.5 * (mid + hi)
        if not lo < left_mid < mid < right_mid < hi:
            # the panel can not be split further in floating point
            return whole, 0.0
        f_lm, f_rm = _finite_value(f, left_mid), _finite_value(f, right_mid)
        counter[0] += 2
        left = (mid - lo) / 6.0 * (f_lo + 4.0 * f_lm + f_mid)
        right = (hi - mid) / 6.0 * (f_mid + 4.0 * f_rm + f_hi)
        delta = left + right - whole
        if abs(delta) <= 15.0 * max(tol, _ROUND_OFF * abs(left + right)):
            return left + right + delta / 15.0, abs(delta) / 15.0
        if depth >= max_depth:
            raise NoConvergence(
                'Quadrature did not converge on [{}, {}] after {} subdivisions.'
                .format(lo, hi, max_depth))
        l_val, l_err = refine(lo, mid, f_lo, f_lm, f_mid, left, tol / 2.0, depth + 1)
        r_val, r_err = refine(mid, hi, f_mid, f_rm, f_hi, right, tol / 2.0, depth + 1)
        return l_val + r_val, l_err + r_err

    return refine(lo, hi, f_lo, f_mid, f_hi, whole, tol, 0)


def integrate(f, lo, hi, tol=1e-12, breakpoints=None, max_depth=QUAD_MAX_DEPTH):
    """Integrate a function with adaptive Simpson subdivision.

    Args:
        f: A function of one number that returns a finite number on [lo, hi].
        lo: The lower limit of integration.
        hi: The upper limit of integration, not smaller than lo.
        tol: The absolute error tolerance. It is shared between the panels in
            proportion to their width. (Default: 1e-12).
        breakpoints: An optional list of points inside (lo, hi) where f has a
            kink, such as the mode of a roof density. Each piece between
            breakpoints is integrated separately.
        max_depth: The number of nested subdivisions after which NoConvergence
            is raised. (Default: 50).

    Returns:
        A QuadratureResult.
    """
    lo, hi = finite_float(lo, 'lo'), finite_float(hi, 'hi')
    tol = tolerance(tol)
    max_depth = int_in_range(max_depth, 0, input_name='max_depth')
    if hi < lo:
        raise DomainViolation(
            'Integration limits must satisfy lo <= hi. Got lo={} and hi={}.'.format(
                lo, hi), 'lo<=hi')
    inner = sorted(set(finite_float(x, 'breakpoint') for x in breakpoints or ()))
    edges = [lo] + [x for x in inner if lo < x < hi] + [hi]
    counter, value, error = [0], 0.0, 0.0
    for p_lo, p_hi in zip(edges[:-1], edges[1:]):
        p_tol = tol * (p_hi - p_lo) / (hi - lo) if hi > lo else tol
        p_val, p_err = _simpson_panel(f, p_lo, p_hi, p_tol, max_depth, counter)
        value += p_val
        error += p_err
    return QuadratureResult(value, error, counter[0])


def fd_derivative(F, x, h=1e-5):
    """Get the central difference (F(x + h) - F(x - h)) / 2h.

    Args:
        F: A function of one number.
        x: The point of evaluation.
        h: The half step, larger than zero. (Default: 1e-5).
    """
    x, h = finite_float(x, 'x'), finite_float(h, 'h')
    if h <= 0:
        raise DomainViolation('Step h must be larger than 0. Got {}.'.format(h), 'h>0')
    value = (F(x + h) - F(x - h)) / (2.0 * h)
    if math.isnan(value) or math.isinf(value):
        raise NonFinite('Finite difference at x={} is not finite.'.format(x))
    return value


def bisect_quantile(F, u, lo, hi, tol=1e-12):
    """Invert a non-decreasing function by bisection.

    The search stops once |F(x) - u| <= tol and the bracket is no wider than
    tol, or when the bracket can not be split any further.

    Args:
        F: A non-decreasing function of one number, such as a cdf.
        u: The target value, with F(lo) <= u <= F(hi).
        lo: The lower end of the bracket.
        hi: The upper end of the bracket.
        tol: The tolerance on both F(x) - u and the bracket width. (Default: 1e-12).
    """
    u = finite_float(u, 'u')
    lo, hi = support_limits(lo, hi)
    tol = tolerance(tol)
    f_lo, f_hi = F(lo), F(hi)
    if not f_lo <= u <= f_hi:
        raise BracketViolation(
            'Target {} is not between F(lo)={} and F(hi)={}.'.format(u, f_lo, f_hi))
    if u == f_lo:
        return lo
    if u == f_hi:
        return hi
    while True:
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            return mid
        f_mid = F(mid)
        if abs(f_mid - u) <= tol and hi - lo <= tol:
            return mid
        if f_mid < u:
            lo = mid
        else:
            hi = mid


def ks_statistic(samples, F):
    """Get the two-sided Kolmogorov-Smirnov distance of a sample to a cdf.

    Args:
        samples: A list of numbers. It is sorted before the comparison.
        F: The cumulative distribution function to compare against.

    Returns:
        The largest of |i/n - F(x_i)| and |(i - 1)/n - F(x_i)| over the
        sorted sample.
    """
    values = sorted(samples)
    if not values:
        raise EmptySample('A Kolmogorov-Smirnov statistic needs at least one sample.')
    n = len(values)
    d_max = 0.0
    for i, x in enumerate(values, 1):
        f_x = F(x)
        d_max = max(d_max, abs(i / n - f_x), abs((i - 1) / n - f_x))
    return d_max


def moment_numeric(pdf, a, b, k, breakpoints=None, tol=1e-12):
    """Get a raw moment of a density by quadrature.

    Args:
        pdf: A density function.
        a: The lower limit of the support.
        b: The upper limit of the support.
        k: The order of the moment, 1 or 2.
        breakpoints: Kinks of the density inside (a, b), usually the mode.
        tol: The quadrature tolerance. (Default: 1e-12).
    """
    if k not in (1, 2):
        raise DomainViolation(
            'Moment order must be 1 or 2. Got {}.'.format(k), 'k in {1,2}')
    return integrate(lambda x: x ** k * pdf(x), a, b, tol, breakpoints).value


def histogram(values, lo, hi, bins):
    """Count values in equal-width bins between lo and hi.

    Bins are closed on their left and open on their right except the last one,
    which also holds the values equal to hi. Values outside [lo, hi] are not
    counted.

    Args:
        values: A list of numbers.
        lo: The lower edge of the first bin.
        hi: The upper edge of the last bin.
        bins: The number of bins, at least 1.

    Returns:
        A list of (bin_lo, bin_hi, count) tuples.
    """
    lo, hi = support_limits(lo, hi)
    bins = int_in_range(bins, 1, input_name='bins')
    counts = [0] * bins
    for x in values:
        if lo <= x <= hi:
            counts[min(int((x - lo) * bins / (hi - lo)), bins - 1)] += 1
    edges = [lo + (hi - lo) * i / bins for i in range(bins)] + [hi]
    return [(edges[i], edges[i + 1], counts[i]) for i in range(bins)]
