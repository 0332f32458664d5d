# coding: utf-8
"""Independent check of the Saltbox-Roof formulas through truncation.

A Saltbox-Roof distribution is the triangular distribution on [a, e] with
apex c, truncated on its right at b. The far vertex e is recovered from the
two heights by similar triangles and the truncated distribution follows from
the triangular G, g and G^-1:

.. code-block:: text

    F(x) = (G(x) - G(a)) / (G(b) - G(a))
    f(x) = g(x) / (G(b) - G(a))
    F^-1(u) = G^-1(u (G(b) - G(a)) + G(a))

None of the functions below call the explicit Saltbox-Roof formulas, so the two
paths can be compared against each other.
"""
from __future__ import division

import logging
import math

from .config import EPS_AREA, EPS_FLAT
from .errors import DomainViolation, FlatShape, DegenerateWindow
from .family import ShedFlat
from .prng import Xoshiro256StarStar
from .typing import finite_float, probability, sample_count

_logger = logging.getLogger(__name__)


class TriangularSupport(object):
    """An un-truncated triangular distribution on [d, e] with apex c.

    Args:
        d: The lower limit of the triangle.
        e: The upper limit of the triangle.
        c: The apex, with d <= c < e.

    Properties:
        * d
        * e
        * c
    """
    __slots__ = ('_d', '_e', '_c')

    def __init__(self, d, e, c):
        d = finite_float(d, 'd')
        e = finite_float(e, 'e')
        c = finite_float(c, 'c')
        if not d <= c < e:
            raise DomainViolation(
                'Triangle limits must satisfy d <= c < e. Got d={}, c={} and '
                'e={}.'.format(d, c, e), 'd<=c<e')
        self._d, self._e, self._c = d, e, c

    @property
    def d(self):
        """Get the lower limit of the triangle."""
        return self._d

    @property
    def e(self):
        """Get the upper limit of the triangle."""
        return self._e

    @property
    def c(self):
        """Get the apex."""
        return self._c

    def pdf(self, x):
        """Get the triangular density g(x)."""
        x = finite_float(x, 'x')
        d, e, c = self._d, self._e, self._c
        if x < d or x > e:
            return 0.0
        if x < c:
            return 2.0 * (x - d) / ((e - d) * (c - d))
        return 2.0 * (e - x) / ((e - d) * (e - c))

    def cdf(self, x):
        """Get the triangular cumulative probability G(x).

        The descending branch is written as a ratio of products so that it
        keeps its accuracy when e is far beyond the point of evaluation.
        """
        x = finite_float(x, 'x')
        d, e, c = self._d, self._e, self._c
        if x <= d:
            return 0.0
        if x >= e:
            return 1.0
        if x <= c:
            return (x - d) ** 2 / ((e - d) * (c - d))
        value = ((e - x) * ((x - d) + (x - c)) + (x - d) * (x - c)) / \
            ((e - d) * (e - c))
        return min(value, 1.0)

    def quantile(self, u):
        """Get the triangular quantile G^-1(u)."""
        u = probability(u, 'u')
        d, e, c = self._d, self._e, self._c
        if u == 0.0:
            return d
        if u == 1.0:
            return e
        if u <= (c - d) / (e - d):
            return d + math.sqrt(u * (e - d) * (c - d))
        # distance from c, the root of (e - c)^2 - (1 - u)(e - d)(e - c) = ...
        root = math.sqrt((1.0 - u) * (e - d) * (e - c))
        t = (e - c) * max(u * (e - d) - (c - d), 0.0) / ((e - c) + root)
        return min(c + t, e)

    def to_dict(self):
        """Get TriangularSupport as a dictionary."""
        return {'type': 'TriangularSupport', 'd': self._d, 'e': self._e, 'c': self._c}

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'TriangularSupport [d: {}] [e: {}] [c: {}]'.format(
            self._d, self._e, self._c)


class TruncationWindow(object):
    """The interval [lo, hi] kept from a triangle, with its cumulative limits.

    Args:
        lo: The lower end of the window.
        hi: The upper end of the window.
        g_lo: The triangle's cumulative probability at lo.
        g_hi: The triangle's cumulative probability at hi.

    Properties:
        * lo
        * hi
        * g_lo
        * g_hi
        * mass
    """
    __slots__ = ('_lo', '_hi', '_g_lo', '_g_hi')

    def __init__(self, lo, hi, g_lo, g_hi):
        self._lo = finite_float(lo, 'lo')
        self._hi = finite_float(hi, 'hi')
        self._g_lo = probability(g_lo, 'g_lo')
        self._g_hi = probability(g_hi, 'g_hi')
        if not self._lo < self._hi:
            raise DomainViolation(
                'Window must satisfy lo < hi. Got lo={} and hi={}.'.format(
                    self._lo, self._hi), 'lo<hi')
        if self._g_hi - self._g_lo < EPS_AREA:
            raise DegenerateWindow(
                'Window [{}, {}] holds a probability mass of {}.'.format(
                    self._lo, self._hi, self._g_hi - self._g_lo))

    @classmethod
    def from_support(cls, support, lo, hi):
        """Create the TruncationWindow of a TriangularSupport between lo and hi."""
        return cls(lo, hi, support.cdf(lo), support.cdf(hi))

    @property
    def lo(self):
        """Get the lower end of the window."""
        return self._lo

    @property
    def hi(self):
        """Get the upper end of the window."""
        return self._hi

    @property
    def g_lo(self):
        """Get the cumulative probability of the triangle at lo."""
        return self._g_lo

    @property
    def g_hi(self):
        """Get the cumulative probability of the triangle at hi."""
        return self._g_hi

    @property
    def mass(self):
        """Get the probability mass inside the window, g_hi - g_lo."""
        return self._g_hi - self._g_lo

    def to_dict(self):
        """Get TruncationWindow as a dictionary."""
        return {
            'type': 'TruncationWindow',
            'lo': self._lo,
            'hi': self._hi,
            'g_lo': self._g_lo,
            'g_hi': self._g_hi
        }

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'TruncationWindow [lo: {}] [hi: {}]'.format(self._lo, self._hi)


def tri_pdf(support, x):
    """Get the density of a TriangularSupport at x."""
    return support.pdf(x)


def tri_cdf(support, x):
    """Get the cumulative probability of a TriangularSupport at x."""
    return support.cdf(x)


def tri_quantile(support, u):
    """Get the quantile of a TriangularSupport at u."""
    return support.quantile(u)


def apex_from_heights(a, b, c, h_c, h_b):
    """Get the far vertex e of the triangle that a Saltbox-Roof truncates.

    Similar triangles give e = (h_c b - h_b c) / (h_c - h_b), evaluated here as
    b + h_b (b - c) / (h_c - h_b).

    Args:
        a: The lower limit of the support.
        b: The upper limit of the support.
        c: The mode, with a <= c < b.
        h_c: The density at the mode.
        h_b: The residual density at b, with 0 <= h_b < h_c.
    """
    a, b, c = finite_float(a, 'a'), finite_float(b, 'b'), finite_float(c, 'c')
    h_c, h_b = finite_float(h_c, 'h_c'), finite_float(h_b, 'h_b')
    if not a <= c < b:
        raise DomainViolation(
            'Apex recovery needs a <= c < b. Got a={}, b={} and c={}.'.format(a, b, c),
            'a<=c<b')
    if h_b < 0:
        raise DomainViolation('Residual height h_b must not be negative.', 'h_b>=0')
    if h_c - h_b < EPS_FLAT * h_c:
        raise FlatShape(
            'Heights h_c={} and h_b={} are equal; the triangle has no finite '
            'apex.'.format(h_c, h_b))
    return b + h_b * (b - c) / (h_c - h_b)


def truncated_cdf(support, window, x):
    """Get the truncated cumulative probability (G(x) - G(lo)) / (G(hi) - G(lo))."""
    x = finite_float(x, 'x')
    if x <= window.lo:
        return 0.0
    if x >= window.hi:
        return 1.0
    value = (support.cdf(x) - window.g_lo) / window.mass
    return min(max(value, 0.0), 1.0)


def truncated_pdf(support, window, x):
    """Get the truncated density g(x) / (G(hi) - G(lo)), zero outside the window."""
    x = finite_float(x, 'x')
    if x < window.lo or x > window.hi:
        return 0.0
    return support.pdf(x) / window.mass


def truncated_quantile(support, window, u):
    """Get the truncated quantile G^-1(u (G(hi) - G(lo)) + G(lo)).

    With a window that starts at the lower limit of the triangle G(lo) is 0
    and the argument is exactly u G(hi).
    """
    u = probability(u, 'u')
    if u == 0.0:
        return window.lo
    if u == 1.0:
        return window.hi
    v = min(u * (window.g_hi - window.g_lo) + window.g_lo, 1.0)
    return min(max(support.quantile(v), window.lo), window.hi)


def oracle_for(dist):
    """Get the triangle and window whose truncation reproduces a SaltboxRoof.

    Args:
        dist: A SaltboxRoof with h_c > h_b and c < b.

    Returns:
        A tuple with a TriangularSupport on [a, e] and its TruncationWindow [a, b].
    """
    e = apex_from_heights(dist.a, dist.b, dist.c, dist.h_c, dist.h_b)
    support = TriangularSupport(dist.a, max(e, dist.b), dist.c)
    return support, TruncationWindow.from_support(support, dist.a, dist.b)


def _oracle_quantile(dist):
    """Get a function of u that inverts the distribution without its own formulas."""
    if dist.c >= dist.b or dist.b - dist.c < EPS_FLAT * (dist.b - dist.a):
        family = dist.to_family()
        _logger.debug('%r has no descending branch; using %s.', dist, family.kind)
        return family.quantile
    try:
        support, window = oracle_for(dist)
    except FlatShape:
        _logger.debug('%r has a flat plateau; using ShedFlat.', dist)
        return ShedFlat(dist.a, dist.b, dist.c).quantile
    return lambda u: truncated_quantile(support, window, u)


def quantile_comparison(dist, n, seed):
    """Get the explicit and truncation quantiles of n seeded probabilities.

    Args:
        dist: A SaltboxRoof.
        n: The number of probabilities to draw.
        seed: Seed of the xoshiro256** generator drawing the probabilities.

    Returns:
        A list of (u, explicit, oracle, abs_diff) tuples.
    """
    n = sample_count(n, 'comparison count')
    oracle = _oracle_quantile(dist)
    rng = Xoshiro256StarStar(seed)
    rows = []
    for _ in range(n):
        u = rng.random()
        explicit, other = dist.quantile(u), oracle(u)
        rows.append((u, explicit, other, abs(explicit - other)))
    return rows


def compare_quantiles(dist, n, seed):
    """Get the largest quantile difference between the explicit and truncation paths.

    Args:
        dist: A SaltboxRoof.
        n: The number of seeded probabilities. Zero gives 0.
        seed: Seed of the generator drawing the probabilities.
    """
    rows = quantile_comparison(dist, n, seed)
    return max([row[3] for row in rows]) if rows else 0.0
