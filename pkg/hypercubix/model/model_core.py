"""
hypercubix.model.model_core
===========================

The value types shared by the density, mixture, Bayesian and sampling modules,
along with the exception hierarchy for the model layer.

Usage
-----

This module should not be used directly; instead, import the
`hypercubix.model` package.

Legal
-----

This file is part of hypercubix.
hypercubix is free software; you can redistribute it and/or modify
it under the terms of the GNU Lesser General Public License as published
by the Free Software Foundation; either version 3 of the License, or
(at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU Lesser General Public License for more details.

You should have received a copy of the GNU General Public License and
GNU Lesser General Public License along with this program. If not, see
<http://www.gnu.org/licenses/>.
"""
import collections
import math


#Functions
###############################################################################
def as_point(x, dimension=None):
    """
    Coerces `x`, a `Point` or any sequence of reals, into a `Point`, optionally
    insisting on a specific `dimension`.
    """
    point = x if isinstance(x, Point) else Point(x)
    if dimension is not None and point.dimension != dimension:
        raise InvalidPoint("Expected a point in dimension %(expected)i; received one in dimension %(received)i" % {
         'expected': dimension,
         'received': point.dimension,
        }, {'point': point.coords})
    return point

def as_correlation(rho, regular=True):
    """
    Coerces `rho` into a `Correlation`. If `regular` is set, |rho| = 1 raises
    `SingularCorrelation`, since no density exists there.
    """
    correlation = rho if isinstance(rho, Correlation) else Correlation(rho)
    if regular and correlation.singular:
        raise SingularCorrelation("The bivariate normal density is undefined at rho = %(rho)r" % {
         'rho': float(correlation),
        }, {'rho': float(correlation)})
    return correlation

def require_dimension(p, minimum=1):
    """
    Validates a dimension argument, returning it as an int.
    """
    if isinstance(p, bool) or int(p) != p or p < minimum:
        raise InvalidDimension("Dimension must be an integer >= %(minimum)i; received %(p)r" % {
         'minimum': minimum,
         'p': p,
        }, {'p': p})
    return int(p)


#Classes
###############################################################################
class Point(object):
    """
    A point in p-dimensional space, p >= 1, with its max-norm cached; every
    density in this package depends on a point only through that norm.
    """
    __slots__ = ('_coords', '_max_norm')

    def __init__(self, coords):
        coords = tuple(float(c) for c in coords)
        if not coords:
            raise InvalidPoint("A point needs at least one coordinate")
        if not all(math.isfinite(c) for c in coords):
            raise InvalidPoint("Point coordinates must be finite; received %(coords)r" % {
             'coords': coords,
            }, {'point': coords})
        self._coords = coords
        self._max_norm = max(abs(c) for c in coords)

    @property
    def coords(self):
        return self._coords

    @property
    def max_norm(self):
        return self._max_norm

    @property
    def dimension(self):
        return len(self._coords)

    @property
    def is_origin(self):
        return self._max_norm == 0.0

    def __len__(self):
        return len(self._coords)

    def __iter__(self):
        return iter(self._coords)

    def __getitem__(self, index):
        return self._coords[index]

    def __eq__(self, o):
        if isinstance(o, Point):
            return self._coords == o._coords
        return NotImplemented

    def __ne__(self, o):
        result = self.__eq__(o)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._coords)

    def __repr__(self):
        return 'Point(%(coords)r)' % {
         'coords': self._coords,
        }

class Correlation(float):
    """
    A correlation coefficient, confined to [-1, 1]. Densities additionally
    require |rho| < 1; see `singular`.
    """
    def __new__(cls, rho):
        value = float(rho)
        if not -1.0 <= value <= 1.0:
            raise InvalidCorrelation("Correlation must lie in [-1, 1]; received %(rho)r" % {
             'rho': rho,
            }, {'rho': value})
        return float.__new__(cls, value)

    @property
    def singular(self):
        """
        Indicates whether |rho| = 1, where the bivariate normal degenerates.
        """
        return abs(self) == 1.0

    def __repr__(self):
        return 'Correlation(%(rho)r)' % {
         'rho': float(self),
        }

class DensityValue(collections.namedtuple('DensityValue', ('value', 'infinite'))):
    """
    A density evaluation: a non-negative real, or the distinguished
    `INFINITE_AT_ORIGIN` marker produced by dimensions p >= 3 at the origin.
    """
    __slots__ = ()

    @classmethod
    def finite(cls, value):
        return cls(float(value), False)

    def __float__(self):
        return self.value

INFINITE_AT_ORIGIN = DensityValue(math.inf, True)


#Exceptions
###############################################################################
class ModelException(Exception):
    """
    The base exception from which all exceptions native to the model layer
    inherit.
    """
    items = None #Diagnostic values describing the failure, as a dictionary.

    def __init__(self, message, items=None):
        Exception.__init__(self, message)
        self.items = items if items else {}

class ModelError(ModelException):
    """
    The base error from which all errors native to the model layer inherit.
    """

class InvalidPoint(ModelError, ValueError):
    """
    Indicates that a point was empty, non-finite or of the wrong dimension.
    """

class InvalidDimension(ModelError, ValueError):
    """
    Indicates that a dimension argument was not a positive integer in range.
    """

class InvalidCorrelation(ModelError, ValueError):
    """
    Indicates that a correlation fell outside [-1, 1].
    """

class SingularCorrelation(ModelError, ValueError):
    """
    Indicates that a density was requested at |rho| = 1.
    """

class UndefinedArgmin(ModelError):
    """
    Indicates that the minimiser of the exponent profile was requested at the
    origin, where the profile is identically zero.
    """

class InvalidArgument(ModelError, ValueError):
    """
    Indicates that a scalar argument fell outside its permitted range.
    """

class InvalidTolerance(InvalidArgument):
    """
    Indicates that a tolerance was tighter than an operation supports.
    """
