# coding: utf-8
"""Closed forms of the six roof shapes that degenerate from the saltbox roof.

Each member is defined by its piecewise-linear density and the cumulative and
quantile functions are integrated and inverted from it directly.
"""
from __future__ import division

import math

from .config import EPS_DOMAIN
from .errors import DomainViolation
from .kind import RoofShapeKind
from .moments import saltbox_mean, saltbox_variance
from .typing import finite_float, probability, support_limits


def _mode_in_support(c, a, b):
    c = finite_float(c, 'c')
    if not a <= c <= b:
        raise DomainViolation(
            'Mode c must be between a and b. Got a={}, b={} and c={}.'.format(a, b, c),
            'a<=c<=b')
    return c


class _RoofFamilyBase(object):
    """Base object for all degenerate roof distributions.

    This object records the methods that each member overwrites. Evaluation
    outside the support and at the ends of [0, 1] is handled here so that the
    members only implement their interior formulas.

    Args:
        a: The lower limit of the support.
        b: The upper limit of the support.
    """
    __slots__ = ('_a', '_b')
    KIND = None

    def __init__(self, a, b):
        self._a, self._b = support_limits(a, b)

    @property
    def kind(self):
        """Get text for the roof shape of this distribution."""
        return self.KIND

    @property
    def a(self):
        """Get the lower limit of the support."""
        return self._a

    @property
    def b(self):
        """Get the upper limit of the support."""
        return self._b

    @property
    def width(self):
        """Get the width of the support (b - a)."""
        return self._b - self._a

    @property
    def mean(self):
        """Get the mean of the distribution."""
        raise NotImplementedError

    @property
    def variance(self):
        """Get the variance of the distribution."""
        raise NotImplementedError

    def pdf(self, x):
        """Get the probability density at x.

        Args:
            x: A finite number. Values outside [a, b] have zero density.
        """
        x = finite_float(x, 'x')
        if x < self._a or x > self._b:
            return 0.0
        return self._pdf(x)

    def cdf(self, x):
        """Get the cumulative probability at x.

        Args:
            x: A finite number.
        """
        x = finite_float(x, 'x')
        if x <= self._a:
            return 0.0
        if x >= self._b:
            return 1.0
        return min(max(self._cdf(x), 0.0), 1.0)

    def quantile(self, u):
        """Get the value whose cumulative probability is u.

        Args:
            u: A probability between 0 and 1. The ends map exactly to a and b.
        """
        u = probability(u, 'u')
        if u == 0.0:
            return self._a
        if u == 1.0:
            return self._b
        return min(max(self._quantile(u), self._a), self._b)

    def to_dict(self):
        """Get the distribution as a dictionary."""
        return {'type': self.KIND, 'a': self._a, 'b': self._b}

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def ToString(self):
        return self.__repr__()

    def _pdf(self, x):
        raise NotImplementedError

    def _cdf(self, x):
        raise NotImplementedError

    def _quantile(self, u):
        raise NotImplementedError

    def __repr__(self):
        return '{} [a: {}] [b: {}]'.format(self.KIND, self._a, self._b)


class Uniform(_RoofFamilyBase):
    """The flat roof: the uniform distribution on [a, b].

    Args:
        a: The lower limit of the support.
        b: The upper limit of the support.
    """
    __slots__ = ()
    KIND = RoofShapeKind.UNIFORM

    @property
    def h_r(self):
        """Get the constant density 1 / (b - a)."""
        return 1.0 / self.width

    @property
    def mean(self):
        return (self._a + self._b) / 2.0

    @property
    def variance(self):
        return self.width ** 2 / 12.0

    def _pdf(self, x):
        return self.h_r

    def _cdf(self, x):
        return (x - self._a) / self.width

    def _quantile(self, u):
        return self._a + u * self.width

    @classmethod
    def from_dict(cls, data):
        """Create Uniform from a dictionary.

        .. code-block:: python

            {
            "type": "Uniform",
            "a": 2,
            "b": 5
            }
        """
        assert data['type'] == 'Uniform', \
            'Expected Uniform dictionary. Got {}.'.format(data['type'])
        return cls(data['a'], data['b'])

    def __copy__(self):
        return Uniform(self._a, self._b)


class Triangular(_RoofFamilyBase):
    """The gabled roof: the triangular distribution on [a, b] with mode c.

    Args:
        a: The lower limit of the support.
        b: The upper limit of the support.
        c: The mode, between a and b.
    """
    __slots__ = ('_c',)
    KIND = RoofShapeKind.TRIANGULAR

    def __init__(self, a, b, c):
        _RoofFamilyBase.__init__(self, a, b)
        self._c = _mode_in_support(c, self._a, self._b)

    @property
    def c(self):
        """Get the mode."""
        return self._c

    @property
    def mean(self):
        return (self._a + self._b + self._c) / 3.0

    @property
    def variance(self):
        a, b, c = self._a, self._b, self._c
        return (a * a + b * b + c * c - a * b - a * c - b * c) / 18.0

    def _pdf(self, x):
        a, b, c = self._a, self._b, self._c
        if x < c:
            return 2.0 * (x - a) / ((b - a) * (c - a))
        if x == c:
            return 2.0 / (b - a)
        return 2.0 * (b - x) / ((b - a) * (b - c))

    def _cdf(self, x):
        a, b, c = self._a, self._b, self._c
        if x <= c:
            return (x - a) ** 2 / ((b - a) * (c - a))
        return 1.0 - (b - x) ** 2 / ((b - a) * (b - c))

    def _quantile(self, u):
        a, b, c = self._a, self._b, self._c
        if u <= (c - a) / (b - a):
            return a + math.sqrt(u * (b - a) * (c - a))
        return b - math.sqrt((1.0 - u) * (b - a) * (b - c))

    @classmethod
    def from_dict(cls, data):
        """Create Triangular from a dictionary.

        .. code-block:: python

            {
            "type": "Triangular",
            "a": 0,
            "b": 1,
            "c": 0.25
            }
        """
        assert data['type'] == 'Triangular', \
            'Expected Triangular dictionary. Got {}.'.format(data['type'])
        return cls(data['a'], data['b'], data['c'])

    def to_dict(self):
        base = _RoofFamilyBase.to_dict(self)
        base['c'] = self._c
        return base

    def __copy__(self):
        return Triangular(self._a, self._b, self._c)

    def __repr__(self):
        return 'Triangular [a: {}] [b: {}] [c: {}]'.format(self._a, self._b, self._c)


class LeftShed(_RoofFamilyBase):
    """The left-sided shed roof: a right triangle with its maximum at b.

    Args:
        a: The lower limit of the support.
        b: The upper limit of the support.
    """
    __slots__ = ()
    KIND = RoofShapeKind.LEFT_SHED

    @property
    def mean(self):
        return (self._a + 2.0 * self._b) / 3.0

    @property
    def variance(self):
        return self.width ** 2 / 18.0

    def _pdf(self, x):
        return 2.0 * (x - self._a) / self.width ** 2

    def _cdf(self, x):
        return ((x - self._a) / self.width) ** 2

    def _quantile(self, u):
        return self._a + math.sqrt(u) * self.width

    @classmethod
    def from_dict(cls, data):
        """Create LeftShed from a dictionary.

        .. code-block:: python

            {
            "type": "LeftShed",
            "a": 0,
            "b": 1
            }
        """
        assert data['type'] == 'LeftShed', \
            'Expected LeftShed dictionary. Got {}.'.format(data['type'])
        return cls(data['a'], data['b'])

    def __copy__(self):
        return LeftShed(self._a, self._b)


class RightShed(_RoofFamilyBase):
    """The right-sided shed roof: a right triangle with its maximum at a.

    Args:
        a: The lower limit of the support.
        b: The upper limit of the support.
    """
    __slots__ = ()
    KIND = RoofShapeKind.RIGHT_SHED

    @property
    def mean(self):
        return (2.0 * self._a + self._b) / 3.0

    @property
    def variance(self):
        return self.width ** 2 / 18.0

    def _pdf(self, x):
        return 2.0 * (self._b - x) / self.width ** 2

    def _cdf(self, x):
        return 1.0 - ((self._b - x) / self.width) ** 2

    def _quantile(self, u):
        return self._b - self.width * math.sqrt(1.0 - u)

    @classmethod
    def from_dict(cls, data):
        """Create RightShed from a dictionary.

        .. code-block:: python

            {
            "type": "RightShed",
            "a": 0,
            "b": 1
            }
        """
        assert data['type'] == 'RightShed', \
            'Expected RightShed dictionary. Got {}.'.format(data['type'])
        return cls(data['a'], data['b'])

    def __copy__(self):
        return RightShed(self._a, self._b)


class ShedFlat(_RoofFamilyBase):
    """The shed-flat roof: a ramp from a up to c followed by a plateau to b.

    Args:
        a: The lower limit of the support.
        b: The upper limit of the support.
        c: The end of the ramp, between a and b.
    """
    __slots__ = ('_c', '_h_p')
    KIND = RoofShapeKind.SHED_FLAT

    def __init__(self, a, b, c):
        _RoofFamilyBase.__init__(self, a, b)
        self._c = _mode_in_support(c, self._a, self._b)
        self._h_p = 2.0 / (2.0 * self._b - self._a - self._c)

    @property
    def c(self):
        """Get the end of the ramp."""
        return self._c

    @property
    def h_p(self):
        """Get the height of the plateau, 2 / (2b - a - c)."""
        return self._h_p

    @property
    def h_r(self):
        """Get the height 1 / (b - a) of the uniform on the same support."""
        return 1.0 / self.width

    @property
    def mean(self):
        return saltbox_mean(self._a, self._b, self._c, self._h_p)

    @property
    def variance(self):
        return saltbox_variance(self._a, self._b, self._c, self._h_p)

    def _pdf(self, x):
        if x < self._c:
            return self._h_p * (x - self._a) / (self._c - self._a)
        return self._h_p

    def _cdf(self, x):
        a, c, h_p = self._a, self._c, self._h_p
        if x <= c:
            return h_p * (x - a) ** 2 / (2.0 * (c - a))
        return 0.5 * (c - a) * h_p + (x - c) * h_p

    def _quantile(self, u):
        a, c, h_p = self._a, self._c, self._h_p
        f_c = 0.5 * (c - a) * h_p
        if u <= f_c:
            return a + math.sqrt(2.0 * u * (c - a) / h_p)
        return c + (u - f_c) / h_p

    @classmethod
    def from_dict(cls, data):
        """Create ShedFlat from a dictionary.

        .. code-block:: python

            {
            "type": "ShedFlat",
            "a": 0,
            "b": 1,
            "c": 0.5
            }
        """
        assert data['type'] == 'ShedFlat', \
            'Expected ShedFlat dictionary. Got {}.'.format(data['type'])
        return cls(data['a'], data['b'], data['c'])

    def to_dict(self):
        base = _RoofFamilyBase.to_dict(self)
        base['c'] = self._c
        return base

    def __copy__(self):
        return ShedFlat(self._a, self._b, self._c)

    def __repr__(self):
        return 'ShedFlat [a: {}] [b: {}] [c: {}]'.format(self._a, self._b, self._c)


class Skillion(_RoofFamilyBase):
    """The skillion roof: a vertical rise to h_c at a, then a line down to h_b at b.

    Args:
        a: The lower limit of the support.
        b: The upper limit of the support.
        h_c: The density at a. It must lie between 1 / (b - a), which gives
            the uniform distribution, and 2 / (b - a), which gives the
            right-sided shed.
    """
    __slots__ = ('_h_c',)
    KIND = RoofShapeKind.SKILLION

    def __init__(self, a, b, h_c):
        _RoofFamilyBase.__init__(self, a, b)
        h_c = finite_float(h_c, 'h_c')
        rel = h_c * self.width
        if not 1.0 - EPS_DOMAIN <= rel <= 2.0 + EPS_DOMAIN:
            raise DomainViolation(
                'Skillion h_c must be between 1/(b-a) and 2/(b-a). '
                'Got h_c={} for b-a={}.'.format(h_c, self.width), 'h_c range')
        self._h_c = h_c

    @property
    def h_c(self):
        """Get the density at a."""
        return self._h_c

    @property
    def h_b(self):
        """Get the density at b, (2 - h_c (b - a)) / (b - a)."""
        return max((2.0 - self._h_c * self.width) / self.width, 0.0)

    @property
    def mean(self):
        return saltbox_mean(self._a, self._b, self._a, self._h_c)

    @property
    def variance(self):
        return saltbox_variance(self._a, self._b, self._a, self._h_c)

    def _slope(self):
        return (self._h_c - self.h_b) / self.width

    def _pdf(self, x):
        return self._h_c - self._slope() * (x - self._a)

    def _cdf(self, x):
        t = x - self._a
        return self._h_c * t - 0.5 * self._slope() * t * t

    def _quantile(self, u):
        h_c = self._h_c
        disc = max(h_c * h_c - 2.0 * self._slope() * u, 0.0)
        return self._a + 2.0 * u / (h_c + math.sqrt(disc))

    @classmethod
    def from_dict(cls, data):
        """Create Skillion from a dictionary.

        .. code-block:: python

            {
            "type": "Skillion",
            "a": 0,
            "b": 1,
            "h_c": 1.5
            }
        """
        assert data['type'] == 'Skillion', \
            'Expected Skillion dictionary. Got {}.'.format(data['type'])
        return cls(data['a'], data['b'], data['h_c'])

    def to_dict(self):
        base = _RoofFamilyBase.to_dict(self)
        base['h_c'] = self._h_c
        return base

    def __copy__(self):
        return Skillion(self._a, self._b, self._h_c)

    def __repr__(self):
        return 'Skillion [a: {}] [b: {}] [h_c: {}]'.format(self._a, self._b, self._h_c)


def roof_family(kind, a, b, c=None, h_c=None):
    """Get a degenerate roof distribution from its kind and parameters.

    Args:
        kind: Text for one of the six degenerate kinds in RoofShapeKind.
        a: The lower limit of the support.
        b: The upper limit of the support.
        c: The mode. Required for Triangular and ShedFlat; ignored otherwise.
        h_c: The density at a. Required for Skillion; ignored otherwise.

    Returns:
        An instance of the family class named by kind.
    """
    if kind not in RoofShapeKind.FAMILY_KINDS:
        raise DomainViolation(
            'Roof family kind "{}" is not recognized.\nChoose from the '
            'following:\n{}'.format(kind, RoofShapeKind.FAMILY_KINDS), 'kind')
    if kind in (RoofShapeKind.TRIANGULAR, RoofShapeKind.SHED_FLAT):
        if c is None:
            raise DomainViolation('{} requires the mode c.'.format(kind), 'c')
        return globals()[kind](a, b, c)
    if kind == RoofShapeKind.SKILLION:
        if h_c is None:
            raise DomainViolation('Skillion requires the height h_c.', 'h_c')
        return Skillion(a, b, h_c)
    return globals()[kind](a, b)


def family_from_dict(data):
    """Create any degenerate roof distribution from its dictionary."""
    if data.get('type') not in RoofShapeKind.FAMILY_KINDS:
        raise ValueError(
            'Roof family "{}" is not recognized.'.format(data.get('type')))
    return globals()[data['type']].from_dict(data)
