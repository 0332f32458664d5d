# coding: utf-8
"""The Saltbox-Roof distribution: a triangular distribution truncated on its right.

The density rises linearly from zero at a to h_c at the mode c and then falls
linearly to the residual height h_b at b. Users give the limits, the mode and
the shape factor rho_hat in [0, 1]; the heights are derived so that the area
is one:

.. code-block:: text

    h_c = (1 + rho_hat) / (b - a)
    h_b = (2 - (b - a) h_c) / (b - c)

A pair of limits, mode and shape is valid when the relative mode
c_hat = (c - a) / (b - a) does not exceed c_limit(rho_hat) = 2 - 2 / (rho_hat + 1).
"""
from __future__ import division

import json
import logging
import math

from .config import EPS_DOMAIN, EPS_FLAT, CLASSIFY_TOL
from .errors import DomainViolation
from .family import Uniform, Triangular, LeftShed, RightShed, ShedFlat, Skillion
from .kind import RoofShapeKind
from .moments import Moments, saltbox_mean, saltbox_variance
from .prng import Xoshiro256StarStar
from .typing import finite_float, probability, support_limits, sample_count, \
    point_count, tolerance
from .writer import write_atomic

_logger = logging.getLogger(__name__)


def _unit_value(value, input_name, clause):
    value = finite_float(value, input_name)
    if not 0.0 <= value <= 1.0:
        raise DomainViolation(
            'Input {} must be between 0 and 1. Got {}.'.format(input_name, value),
            clause)
    return value


def c_limit(rho_hat):
    """Get the largest admissible relative mode for a shape factor.

    Args:
        rho_hat: The shape factor, between 0 and 1.

    Returns:
        2 - 2 / (rho_hat + 1), which grows from 0 (uniform) to 1 (triangular).
    """
    rho_hat = _unit_value(rho_hat, 'rho_hat', '0<=shape<=1')
    return 2.0 - 2.0 / (rho_hat + 1.0)


def rho_boundary(c_hat):
    """Get the shape factor whose c_limit is c_hat.

    This is the inverse of c_limit. At c_hat = 1 it returns the limit value 1.

    Args:
        c_hat: A relative mode between 0 and 1.
    """
    c_hat = _unit_value(c_hat, 'c_hat', '0<=c_hat<=1')
    return 2.0 / (2.0 - c_hat) - 1.0


def boundary_residual(c_hat, rho_hat):
    """Get 2 rho_hat - rho_hat c_hat - c_hat for a relative mode and shape.

    The value is zero on the shed-flat boundary of the domain, positive inside
    the domain and negative beyond it.
    """
    c_hat = finite_float(c_hat, 'c_hat')
    rho_hat = finite_float(rho_hat, 'rho_hat')
    return 2.0 * rho_hat - rho_hat * c_hat - c_hat


def read_spec_file(file_path):
    """Get the dictionary of a JSON distribution specification file.

    The keys are not checked here; RoofParams.from_dict does that.
    """
    with open(file_path, 'r') as inf:
        try:
            data = json.load(inf)
        except ValueError as e:
            raise DomainViolation(
                'Distribution specification {} is not valid JSON. {}'.format(
                    file_path, e), 'format')
    if not isinstance(data, dict):
        raise DomainViolation(
            'Distribution specification must be a JSON object. '
            'Got {}.'.format(type(data).__name__), 'format')
    return data


def _check_domain(c_hat, rho_hat):
    limit = c_limit(rho_hat)
    if c_hat > limit + EPS_DOMAIN:
        raise DomainViolation(
            'Relative mode c_hat={} exceeds c_limit={} for shape {}. Lower the '
            'mode or raise the shape factor.'.format(c_hat, limit, rho_hat),
            'c_hat<=c_limit')
    return limit


class RoofParams(object):
    """User parameters of a Saltbox-Roof distribution.

    Args:
        a: The lower limit of the support.
        b: The upper limit of the support. Must be larger than a.
        c: The mode, between a and b.
        shape: The shape factor rho_hat, between 0 (flat) and 1 (triangular).

    Properties:
        * a
        * b
        * c
        * shape
        * c_hat
    """
    __slots__ = ('_a', '_b', '_c', '_shape')
    KEYS = ('a', 'b', 'c', 'shape')

    def __init__(self, a, b, c, shape):
        a, b = support_limits(a, b)
        c = finite_float(c, 'c')
        if not a <= c <= b:
            raise DomainViolation(
                'Mode c must be between a and b. Got a={}, b={} and c={}.'.format(
                    a, b, c), 'a<=c<=b')
        shape = _unit_value(shape, 'shape', '0<=shape<=1')
        _check_domain((c - a) / (b - a), shape)
        self._a, self._b, self._c, self._shape = a, b, c, shape

    @classmethod
    def from_mode_height(cls, a, b, c, h_c):
        """Create RoofParams from the density at the mode instead of the shape.

        Args:
            a: The lower limit of the support.
            b: The upper limit of the support.
            c: The mode.
            h_c: The density at the mode, between 1 / (b - a) and 2 / (b - a).
        """
        a, b = support_limits(a, b)
        rho = finite_float(h_c, 'h_c') * (b - a) - 1.0
        if -EPS_DOMAIN <= rho < 0.0 or 1.0 < rho <= 1.0 + EPS_DOMAIN:
            rho = min(max(rho, 0.0), 1.0)
        return cls(a, b, c, rho)

    @classmethod
    def from_unit(cls, c_hat, rho_hat, a=0.0, b=1.0):
        """Create RoofParams from a relative mode and shape on the support [a, b].

        Args:
            c_hat: The relative mode (c - a) / (b - a).
            rho_hat: The shape factor.
            a: The lower limit of the support. (Default: 0).
            b: The upper limit of the support. (Default: 1).
        """
        a, b = support_limits(a, b)
        c_hat = _unit_value(c_hat, 'c_hat', '0<=c_hat<=1')
        c = b if c_hat == 1.0 else a + (b - a) * c_hat
        return cls(a, b, c, rho_hat)

    @classmethod
    def from_dict(cls, data):
        """Create RoofParams from a dictionary.

        Keys other than the ones below are rejected.

        .. code-block:: python

            {
            "type": "RoofParams",
            "a": 0,
            "b": 1,
            "c": 0.5,
            "shape": 0.5
            }
        """
        unknown = [key for key in data if key not in cls.KEYS + ('type',)]
        if unknown:
            raise DomainViolation(
                'Unknown keys in distribution specification: {}. Expected '
                'the following: {}.'.format(', '.join(sorted(unknown)), cls.KEYS),
                'unknown key')
        if 'type' in data:
            assert data['type'] == 'RoofParams', \
                'Expected RoofParams dictionary. Got {}.'.format(data['type'])
        missing = [key for key in cls.KEYS if data.get(key) is None]
        if missing:
            raise DomainViolation(
                'Distribution specification is missing: {}.'.format(
                    ', '.join(missing)), 'missing key')
        return cls(data['a'], data['b'], data['c'], data['shape'])

    @classmethod
    def from_file(cls, file_path):
        """Create RoofParams from a JSON distribution specification file."""
        return cls.from_dict(read_spec_file(file_path))

    @property
    def a(self):
        """Get the lower limit of the support."""
        return self._a

    @property
    def b(self):
        """Get the upper limit of the support."""
        return self._b

    @property
    def c(self):
        """Get the mode."""
        return self._c

    @property
    def shape(self):
        """Get the shape factor rho_hat."""
        return self._shape

    @property
    def c_hat(self):
        """Get the relative mode (c - a) / (b - a)."""
        return (self._c - self._a) / (self._b - self._a)

    def to_dict(self):
        """Get RoofParams as a dictionary."""
        return {
            'type': 'RoofParams',
            'a': self._a,
            'b': self._b,
            'c': self._c,
            'shape': self._shape
        }

    def to_file(self, file_path, indent=None):
        """Write RoofParams to a JSON file, replacing it atomically."""
        return write_atomic(file_path, json.dumps(self.to_dict(), indent=indent))

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def ToString(self):
        return self.__repr__()

    def __copy__(self):
        return RoofParams(self._a, self._b, self._c, self._shape)

    def __eq__(self, other):
        return isinstance(other, RoofParams) and \
            (self._a, self._b, self._c, self._shape) == \
            (other._a, other._b, other._c, other._shape)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._a, self._b, self._c, self._shape))

    def __repr__(self):
        return 'RoofParams [a: {}] [b: {}] [c: {}] [shape: {}]'.format(
            self._a, self._b, self._c, self._shape)


class UnitShape(object):
    """A Saltbox-Roof shape rescaled to the support [0, 1].

    Args:
        c_hat: The relative mode, between 0 and 1.
        rho_hat: The shape factor, between 0 and 1.

    Properties:
        * c_hat
        * rho_hat
        * hc_hat
        * hb_hat
        * c_limit
    """
    __slots__ = ('_c_hat', '_rho_hat', '_c_limit')

    def __init__(self, c_hat, rho_hat):
        self._c_hat = _unit_value(c_hat, 'c_hat', '0<=c_hat<=1')
        self._rho_hat = _unit_value(rho_hat, 'rho_hat', '0<=shape<=1')
        self._c_limit = _check_domain(self._c_hat, self._rho_hat)

    @property
    def c_hat(self):
        """Get the relative mode."""
        return self._c_hat

    @property
    def rho_hat(self):
        """Get the shape factor."""
        return self._rho_hat

    @property
    def hc_hat(self):
        """Get the relative density at the mode, rho_hat + 1."""
        return self._rho_hat + 1.0

    @property
    def hb_hat(self):
        """Get the relative density at the upper limit.

        It is 0 when the mode sits at the upper limit.
        """
        if 1.0 - self._c_hat < EPS_FLAT:
            return 0.0
        return min((1.0 - self._rho_hat) / (1.0 - self._c_hat), self.hc_hat)

    @property
    def c_limit(self):
        """Get the largest admissible relative mode for this shape factor."""
        return self._c_limit

    def to_params(self, a=0.0, b=1.0):
        """Get RoofParams with this shape on the support [a, b]."""
        return RoofParams.from_unit(self._c_hat, self._rho_hat, a, b)

    def to_dict(self):
        """Get UnitShape as a dictionary."""
        return {
            'type': 'UnitShape',
            'c_hat': self._c_hat,
            'rho_hat': self._rho_hat,
            'hc_hat': self.hc_hat,
            'hb_hat': self.hb_hat,
            'c_limit': self._c_limit
        }

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'UnitShape [c_hat: {}] [rho_hat: {}]'.format(self._c_hat, self._rho_hat)


def to_unit(params):
    """Get the UnitShape of RoofParams.

    Args:
        params: A RoofParams object.
    """
    assert isinstance(params, RoofParams), \
        'Expected RoofParams. Got {}.'.format(type(params))
    return UnitShape(min(params.c_hat, 1.0), params.shape)


def classify(unit, tol=CLASSIFY_TOL):
    """Get the roof kind of a UnitShape.

    Corners of the domain are tested before its edges and edges before the
    interior.

    Args:
        unit: A UnitShape object.
        tol: Distance to a corner or an edge under which the shape is
            considered to lie on it. (Default: 1e-9).

    Returns:
        Text for one of the RoofShapeKind values.
    """
    tol = tolerance(tol)
    c_hat, rho_hat = unit.c_hat, unit.rho_hat
    low_c, high_c = c_hat <= tol, c_hat >= 1.0 - tol
    if rho_hat <= tol and low_c:
        return RoofShapeKind.UNIFORM
    if rho_hat >= 1.0 - tol:
        if low_c:
            return RoofShapeKind.RIGHT_SHED
        if high_c:
            return RoofShapeKind.LEFT_SHED
        return RoofShapeKind.TRIANGULAR
    if low_c:
        return RoofShapeKind.SKILLION
    if abs(c_hat - unit.c_limit) <= tol:
        return RoofShapeKind.SHED_FLAT
    return RoofShapeKind.SALTBOX


def domain_boundary(count):
    """Get points (rho_hat, c_limit) that trace the boundary of the domain.

    Args:
        count: The number of points, at least 2. The shape factors are equally
            spaced from 0 to 1 and both ends are included.
    """
    count = point_count(count, 'grid count')
    rhos = [i / (count - 1) for i in range(count)]
    rhos[-1] = 1.0
    return [(rho, c_limit(rho)) for rho in rhos]


class SaltboxRoof(object):
    """A resolved Saltbox-Roof distribution ready for evaluation.

    Args:
        a: The lower limit of the support.
        b: The upper limit of the support.
        c: The mode.
        shape: The shape factor rho_hat.

    Properties:
        * params
        * a
        * b
        * c
        * shape
        * h_c
        * h_b
        * area
        * unit_shape
        * kind
        * mean
        * variance
        * mode
        * median
        * median_on_ascending_branch
    """
    __slots__ = ('_params', '_h_c', '_h_b', '_shed')

    def __init__(self, a, b, c, shape):
        self._set_params(RoofParams(a, b, c, shape))

    @classmethod
    def from_params(cls, params):
        """Create a SaltboxRoof from RoofParams."""
        assert isinstance(params, RoofParams), \
            'Expected RoofParams. Got {}.'.format(type(params))
        dist = cls.__new__(cls)
        dist._set_params(params)
        return dist

    def _set_params(self, params):
        a, b, c, rho = params.a, params.b, params.c, params.shape
        width = b - a
        self._params = params
        self._h_c = (1.0 + rho) / width
        self._shed = None
        if (b - c) / width < EPS_FLAT:
            # the descending branch vanishes and h_b has no finite formula
            self._h_b = 0.0
            self._shed = LeftShed(a, b)
        elif (c - a) / width < EPS_FLAT and rho >= 1.0 - EPS_FLAT:
            self._h_b = 0.0
            self._shed = RightShed(a, b)
        else:
            self._h_b = min((1.0 - rho) / (b - c), self._h_c)
        if self._shed is not None:
            _logger.debug('%r evaluated through its %s closed form.',
                          params, self._shed.kind)

    @property
    def params(self):
        """Get the RoofParams of the distribution."""
        return self._params

    @property
    def a(self):
        """Get the lower limit of the support."""
        return self._params.a

    @property
    def b(self):
        """Get the upper limit of the support."""
        return self._params.b

    @property
    def c(self):
        """Get the mode."""
        return self._params.c

    @property
    def shape(self):
        """Get the shape factor rho_hat."""
        return self._params.shape

    @property
    def h_c(self):
        """Get the density at the mode."""
        return self._h_c

    @property
    def h_b(self):
        """Get the residual density at the upper limit.

        It is 0 by convention when the mode sits at the upper limit.
        """
        return self._h_b

    @property
    def area(self):
        """Get the area under the two branches of the density."""
        a, b, c = self.a, self.b, self.c
        if self._shed is not None:
            return 0.5 * (b - a) * self._h_c
        return 0.5 * (c - a) * self._h_c + 0.5 * (self._h_c + self._h_b) * (b - c)

    @property
    def unit_shape(self):
        """Get the UnitShape of the distribution."""
        return to_unit(self._params)

    @property
    def kind(self):
        """Get text for the roof kind of the distribution."""
        return classify(self.unit_shape)

    def to_family(self):
        """Get the closed-form family member equal to this distribution.

        Returns:
            A Uniform, Triangular, LeftShed, RightShed, ShedFlat or Skillion
            object, or None when the shape is a proper saltbox.
        """
        kind, a, b = self.kind, self.a, self.b
        if kind == RoofShapeKind.UNIFORM:
            return Uniform(a, b)
        if kind == RoofShapeKind.TRIANGULAR:
            return Triangular(a, b, self.c)
        if kind == RoofShapeKind.LEFT_SHED:
            return LeftShed(a, b)
        if kind == RoofShapeKind.RIGHT_SHED:
            return RightShed(a, b)
        if kind == RoofShapeKind.SHED_FLAT:
            return ShedFlat(a, b, self.c)
        if kind == RoofShapeKind.SKILLION:
            return Skillion(a, b, self._h_c)
        return None

    def pdf(self, x):
        """Get the probability density at x.

        Args:
            x: A finite number. Values outside [a, b] have zero density and
                the density at the mode is h_c.
        """
        x = finite_float(x, 'x')
        if self._shed is not None:
            return self._shed.pdf(x)
        a, b, c = self.a, self.b, self.c
        if x < a or x > b:
            return 0.0
        if x <= c:
            return self._h_c if c == a else self._h_c * (x - a) / (c - a)
        return self._h_c - (self._h_c - self._h_b) * (x - c) / (b - c)

    def _cdf_at_mode(self):
        return 0.5 * (self.c - self.a) * self._h_c

    def cdf(self, x):
        """Get the cumulative probability at x.

        Args:
            x: A finite number.
        """
        x = finite_float(x, 'x')
        if self._shed is not None:
            return self._shed.cdf(x)
        a, b, c = self.a, self.b, self.c
        if x <= a:
            return 0.0
        if x >= b:
            return 1.0
        if x <= c:
            value = self._h_c * (x - a) ** 2 / (2.0 * (c - a))
        else:
            t = x - c
            value = self._cdf_at_mode() + t * self._h_c - \
                t * t * (self._h_c - self._h_b) / (2.0 * (b - c))
        return min(max(value, 0.0), 1.0)

    def quantile(self, u):
        """Get the value whose cumulative probability is u.

        The descending branch solves its quadratic with the cancellation-free
        root, which also covers a flat plateau (h_b equal to h_c).

        Args:
            u: A probability between 0 and 1. quantile(0) is a and quantile(1)
                is b.
        """
        u = probability(u, 'u')
        if self._shed is not None:
            return self._shed.quantile(u)
        a, b, c, h_c, h_b = self.a, self.b, self.c, self._h_c, self._h_b
        if u == 0.0:
            return a
        if u == 1.0:
            return b
        f_c = self._cdf_at_mode()
        if u <= f_c:
            return min(a + math.sqrt(2.0 * u * (c - a) / h_c), c)
        r = u - f_c
        if h_c - h_b < EPS_FLAT * h_c:
            t = r / h_c
        else:
            slope = (h_c - h_b) / (b - c)
            t = 2.0 * r / (h_c + math.sqrt(max(h_c * h_c - 2.0 * slope * r, 0.0)))
        return min(c + t, b)

    def quantiles(self, probabilities):
        """Get a list of quantiles for a sequence of probabilities."""
        return [self.quantile(u) for u in probabilities]

    def sample(self, seed, n):
        """Get n random values by inverse-transform sampling.

        Args:
            seed: An integer seed for the xoshiro256** generator. The same seed
                and n always give the same values.
            n: The number of values. Zero gives an empty list.
        """
        n = sample_count(n, 'sample count')
        rng = Xoshiro256StarStar(seed)
        return [self.quantile(rng.random()) for _ in range(n)]

    @property
    def mean(self):
        """Get the mean, -(b - a)^2 h_c / 6 + c / 3 + 2b / 3."""
        return saltbox_mean(self.a, self.b, self.c, self._h_c)

    @property
    def variance(self):
        """Get the variance.

        (2 (c - b)^2 + (c - 3a + 2b) (a - b)^2 h_c - (a - b)^4 h_c^2) / 36
        """
        return saltbox_variance(self.a, self.b, self.c, self._h_c)

    @property
    def mode(self):
        """Get the mode c."""
        return self.c

    @property
    def median(self):
        """Get the median as quantile(0.5)."""
        return self.quantile(0.5)

    @property
    def median_on_ascending_branch(self):
        """Get a boolean for whether the median lies on the ascending branch.

        This is the case when (c - a) h_c >= 1.
        """
        return (self.c - self.a) * self._h_c >= 1.0

    def median_closed_form(self):
        """Get a + sqrt((c - a) / h_c).

        This expression equals the median only when the median lies on the
        ascending branch (see median_on_ascending_branch).
        """
        return self.a + math.sqrt((self.c - self.a) * self._h_c) / self._h_c

    def moments(self):
        """Get a Moments object with the mean, median, mode and variance."""
        return Moments(self.mean, self.median, self.mode, self.variance)

    def to_dict(self):
        """Get the distribution as a dictionary of its RoofParams."""
        return self._params.to_dict()

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def ToString(self):
        return self.__repr__()

    def __copy__(self):
        return SaltboxRoof.from_params(self._params)

    def __repr__(self):
        return 'SaltboxRoof [a: {}] [b: {}] [c: {}] [shape: {}]'.format(
            self.a, self.b, self.c, self.shape)


def resolve(params):
    """Get the SaltboxRoof of RoofParams, with its heights h_c and h_b computed.

    Args:
        params: A RoofParams object.
    """
    return SaltboxRoof.from_params(params)
