# coding=utf-8
"""Closed-form moments of the saltbox-roof shape.

The expressions hold for any piecewise-linear density that rises from zero at
a to h_c at c and then falls linearly to the height that closes the unit
area at b. They are evaluated with the origin moved to a, which is the same
algebra with better conditioning when a is far from zero.
"""
from __future__ import division


def saltbox_mean(a, b, c, h_c):
    """Get the mean of a saltbox-roof shape.

    Args:
        a: Lower limit.
        b: Upper limit.
        c: Mode.
        h_c: Density at the mode.
    """
    w = b - a
    cr = c - a
    return a + (-w * w * h_c / 6.0 + cr / 3.0 + 2.0 * w / 3.0)


def saltbox_variance(a, b, c, h_c):
    """Get the variance of a saltbox-roof shape.

    Args:
        a: Lower limit.
        b: Upper limit.
        c: Mode.
        h_c: Density at the mode.
    """
    w = b - a
    cr = c - a
    w2 = w * w
    return (2.0 * (cr - w) ** 2 + (cr + 2.0 * w) * w2 * h_c
            - w2 * w2 * h_c * h_c) / 36.0


class Moments(object):
    """Summary moments of a distribution.

    Args:
        mean: The mean.
        median: The median.
        mode: The mode.
        variance: The variance.

    Properties:
        * mean
        * median
        * mode
        * variance
    """
    __slots__ = ('_mean', '_median', '_mode', '_variance')

    def __init__(self, mean, median, mode, variance):
        self._mean = float(mean)
        self._median = float(median)
        self._mode = float(mode)
        self._variance = float(variance)

    @property
    def mean(self):
        """Get the mean."""
        return self._mean

    @property
    def median(self):
        """Get the median."""
        return self._median

    @property
    def mode(self):
        """Get the mode."""
        return self._mode

    @property
    def variance(self):
        """Get the variance."""
        return self._variance

    def to_dict(self):
        """Get Moments as a dictionary."""
        return {
            'type': 'Moments',
            'mean': self.mean,
            'median': self.median,
            'mode': self.mode,
            'variance': self.variance
        }

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'Moments [mean: {}] [median: {}] [mode: {}] [variance: {}]'.format(
            self.mean, self.median, self.mode, self.variance)
