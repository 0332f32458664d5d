# coding: utf-8
"""Quadratic curves sampled with more points where they bend the most."""
from __future__ import division

from .spacing import spaced_points
from .typing import finite_float, support_limits


class CurveSpec(object):
    """A parabola y = a2 x^2 + a1 x + a0 over the interval [x_m, x_M].

    Args:
        a0: The constant coefficient. (Default: 0).
        a1: The linear coefficient. (Default: 0).
        a2: The quadratic coefficient. (Default: 1).
        x_m: The start of the interval. (Default: -1).
        x_M: The end of the interval. (Default: 0.2).

    Properties:
        * a0
        * a1
        * a2
        * x_m
        * x_M
        * vertex
    """
    __slots__ = ('_a0', '_a1', '_a2', '_x_m', '_x_M')

    def __init__(self, a0=0.0, a1=0.0, a2=1.0, x_m=-1.0, x_M=0.2):
        self._a0 = finite_float(a0, 'a0')
        self._a1 = finite_float(a1, 'a1')
        self._a2 = finite_float(a2, 'a2')
        self._x_m, self._x_M = support_limits(x_m, x_M)

    @classmethod
    def from_dict(cls, data):
        """Create CurveSpec from a dictionary.

        .. code-block:: python

            {
            "type": "CurveSpec",
            "a0": 0,
            "a1": 0,
            "a2": 1,
            "x_m": -1,
            "x_M": 0.2
            }
        """
        assert data['type'] == 'CurveSpec', \
            'Expected CurveSpec dictionary. Got {}.'.format(data['type'])
        return cls(data['a0'], data['a1'], data['a2'], data['x_m'], data['x_M'])

    @property
    def a0(self):
        """Get the constant coefficient."""
        return self._a0

    @property
    def a1(self):
        """Get the linear coefficient."""
        return self._a1

    @property
    def a2(self):
        """Get the quadratic coefficient."""
        return self._a2

    @property
    def x_m(self):
        """Get the start of the interval."""
        return self._x_m

    @property
    def x_M(self):
        """Get the end of the interval."""
        return self._x_M

    @property
    def vertex(self):
        """Get the x of the parabola vertex or None for a straight line."""
        return None if self._a2 == 0 else -self._a1 / (2.0 * self._a2)

    def y(self, x):
        """Get the height of the curve at x."""
        x = finite_float(x, 'x')
        return (self._a2 * x + self._a1) * x + self._a0

    def curvature(self, x):
        """Get the signed curvature 2 a2 / (1 + (2 a2 x + a1)^2)^(3/2) at x."""
        x = finite_float(x, 'x')
        slope = 2.0 * self._a2 * x + self._a1
        return 2.0 * self._a2 / (1.0 + slope * slope) ** 1.5

    def to_dict(self):
        """Get CurveSpec as a dictionary."""
        return {
            'type': 'CurveSpec',
            'a0': self._a0,
            'a1': self._a1,
            'a2': self._a2,
            'x_m': self._x_m,
            'x_M': self._x_M
        }

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def ToString(self):
        return self.__repr__()

    def __copy__(self):
        return CurveSpec(self._a0, self._a1, self._a2, self._x_m, self._x_M)

    def __repr__(self):
        return 'CurveSpec [y: {} x^2 + {} x + {}] [x: {} to {}]'.format(
            self._a2, self._a1, self._a0, self._x_m, self._x_M)


def curvature(x, curve):
    """Get the signed curvature of a CurveSpec at x."""
    return curve.curvature(x)


def curve_rows(curve, dist, n):
    """Sample a curve at n points spaced by the quantiles of a distribution.

    Args:
        curve: A CurveSpec.
        dist: A distribution whose support is mapped onto [x_m, x_M].
        n: The number of points, at least 2.

    Returns:
        A list of (x, y, curvature) tuples.
    """
    points = spaced_points(dist, n, curve.x_m, curve.x_M)
    return [(x, curve.y(x), curve.curvature(x)) for x in points]
