# coding: utf-8
"""Non-uniform point spacing through the quantile function of a distribution."""
from __future__ import division

from .typing import finite_float, point_count, support_limits


class SpacedPoints(object):
    """An ordered list of points spread over an interval.

    Args:
        points: A list of non-decreasing numbers between x_m and x_M.
        x_m: The start of the interval.
        x_M: The end of the interval.

    Properties:
        * points
        * x_m
        * x_M
        * steps
    """
    __slots__ = ('_points', '_x_m', '_x_M')

    def __init__(self, points, x_m, x_M):
        self._x_m, self._x_M = support_limits(x_m, x_M)
        points = tuple(finite_float(x, 'point') for x in points)
        assert all(p0 <= p1 for p0, p1 in zip(points[:-1], points[1:])), \
            'Spaced points must be non-decreasing.'
        assert all(self._x_m <= x <= self._x_M for x in points), \
            'Spaced points must lie in [{}, {}].'.format(self._x_m, self._x_M)
        self._points = points

    @property
    def points(self):
        """Get a tuple of the points."""
        return self._points

    @property
    def x_m(self):
        """Get the start of the interval."""
        return self._x_m

    @property
    def x_M(self):
        """Get the end of the interval."""
        return self._x_M

    @property
    def steps(self):
        """Get a tuple with the distances between consecutive points."""
        return tuple(p1 - p0 for p0, p1 in zip(self._points[:-1], self._points[1:]))

    def to_dict(self):
        """Get SpacedPoints as a dictionary."""
        return {
            'type': 'SpacedPoints',
            'points': list(self._points),
            'x_m': self._x_m,
            'x_M': self._x_M
        }

    def ToString(self):
        return self.__repr__()

    def __len__(self):
        return len(self._points)

    def __getitem__(self, key):
        return self._points[key]

    def __iter__(self):
        return iter(self._points)

    def __repr__(self):
        return 'SpacedPoints [count: {}] [x_m: {}] [x_M: {}]'.format(
            len(self._points), self._x_m, self._x_M)


def unit_grid(n):
    """Get n equally spaced probabilities from 0 to 1, both included."""
    n = point_count(n, 'point count')
    grid = [i / (n - 1) for i in range(n)]
    grid[-1] = 1.0
    return grid


def spaced_points(dist, n, x_m=0.0, x_M=1.0):
    """Spread n points over [x_m, x_M] more densely where a distribution peaks.

    An equal-spaced probability grid is passed through the quantile function
    and the result is rescaled from the support [a, b] of the distribution to
    the interval [x_m, x_M]. Both ends of the interval are always included.

    Args:
        dist: A distribution with a, b and quantile, such as a SaltboxRoof.
        n: The number of points, at least 2.
        x_m: The start of the interval. (Default: 0).
        x_M: The end of the interval. (Default: 1).

    Returns:
        A SpacedPoints object.
    """
    x_m, x_M = support_limits(x_m, x_M)
    a, width = dist.a, dist.b - dist.a
    points = [x_m + (x_M - x_m) * (dist.quantile(u) - a) / width
              for u in unit_grid(n)]
    points[0], points[-1] = x_m, x_M
    points = [min(max(x, x_m), x_M) for x in points]
    return SpacedPoints(points, x_m, x_M)
