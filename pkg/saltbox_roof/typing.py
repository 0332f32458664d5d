# coding=utf-8
"""Validators for the numbers that flow through saltbox-roof."""
import math

from honeybee.typing import int_in_range, int_positive, float_positive

from .errors import DomainViolation, NonFinite

__all__ = ('finite_float', 'probability', 'support_limits', 'sample_count',
           'point_count', 'tolerance')


def finite_float(value, input_name=''):
    """Check that a value is a finite real number and return it as a float."""
    try:
        number = float(value)
    except (ValueError, TypeError):
        raise TypeError('Input {} must be a number. Got {}: {}.'.format(
            input_name, type(value), value))
    if math.isnan(number) or math.isinf(number):
        raise NonFinite('Input {} must be finite. Got {}.'.format(input_name, value))
    return number


def probability(value, input_name='probability'):
    """Check that a value is a probability in [0, 1] and return it as a float."""
    try:
        number = finite_float(value, input_name)
    except NonFinite:
        raise DomainViolation(
            'Input {} must be between 0 and 1. Got {}.'.format(input_name, value),
            '0<=u<=1')
    if not 0.0 <= number <= 1.0:
        raise DomainViolation(
            'Input {} must be between 0 and 1. Got {}.'.format(input_name, value),
            '0<=u<=1')
    return number


def support_limits(a, b):
    """Check the lower and upper limits of a support and return them as floats."""
    a = finite_float(a, 'a')
    b = finite_float(b, 'b')
    if not a < b:
        raise DomainViolation(
            'Lower limit a must be smaller than upper limit b. '
            'Got a={} and b={}.'.format(a, b), 'a<b')
    return a, b


def sample_count(value, input_name='sample count'):
    """Check a count that may be zero, such as a number of samples."""
    return int_positive(value, input_name)


def point_count(value, input_name='point count'):
    """Check a count of points that must include both interval ends."""
    return int_in_range(value, 2, input_name=input_name)


def tolerance(value, input_name='tolerance'):
    """Check a non-negative tolerance."""
    return float_positive(value, input_name)
