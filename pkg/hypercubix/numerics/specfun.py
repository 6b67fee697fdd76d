"""
hypercubix.numerics.specfun
===========================

Scalar special functions underlying every density in the package: the standard
normal pdf, cdf, survival function and quantile, and the Gaussian power-tail
integrals

    I(k, t) = integral from t to inf of y^k exp(-y^2/2) dy,  k = 2 - p,

that define the hypercubically-contoured densities.

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
import sys

import numpy as np
from scipy import special

from hypercubix.numerics import quadrature
from hypercubix.numerics.numerics_core import (
 semi_infinite,
 DECAY_EXPONENTIAL,
 DivergentAtOrigin, NumericsError,
)

SQRT_2PI = math.sqrt(2.0 * math.pi)
INV_SQRT_2PI = 1.0 / SQRT_2PI

DEFAULT_TAIL_TOLERANCE = 1e-13 #Absolute, in the scale of the returned integral
DEFAULT_TAIL_RELATIVE_TOLERANCE = 1e-13

_SERIES_LIMIT = 1.0 #Below this t, orders k <= -1 are summed as a power series on [t, 1]
_SERIES_TERMS = 30 #Terms of exp(-y^2/2) kept; the 30th is below 1e-40
_LOG_FLOAT_MAX = math.log(sys.float_info.max)


#Classes
###############################################################################
class TailOrder(collections.namedtuple('TailOrder', ('k',))):
    """
    The power of y in a Gaussian power-tail integral. For dimension p, k = 2 - p,
    so only k <= 1 is meaningful; for k <= -1 the integral diverges as t -> 0.
    """
    __slots__ = ()

    def __new__(cls, k):
        if isinstance(k, bool) or int(k) != k:
            raise InvalidTailOrder("Tail order must be an integer; received %(k)r" % {
             'k': k,
            })
        k = int(k)
        if k > 1:
            raise InvalidTailOrder("Tail order must satisfy k <= 1; received %(k)i" % {
             'k': k,
            }, {'k': k})
        return super(TailOrder, cls).__new__(cls, k)

    @classmethod
    def for_dimension(cls, p):
        """
        Provides the order, 2 - `p`, used by the density in dimension `p`.
        """
        return cls(2 - int(p))

    @property
    def diverges_at_origin(self):
        return self.k <= -1


#Functions
###############################################################################
def std_normal_pdf(x):
    """
    The standard normal density, (2 pi)^(-1/2) exp(-x^2/2).
    """
    return INV_SQRT_2PI * math.exp(-0.5 * x * x)

def std_normal_cdf(x):
    """
    The standard normal distribution function. Scalars and arrays share one
    implementation, `scipy.special.ndtr`, which switches from erf to erfc in
    the tails so that neither side loses digits to cancellation.
    """
    return float(special.ndtr(x))

def std_normal_sf(x):
    """
    The upper tail, 1 - Phi(x), computed directly rather than by subtraction.
    """
    return float(special.ndtr(-x))

def std_normal_cdf_array(x):
    """
    Vectorised Phi for statistics over whole samples.
    """
    return special.ndtr(np.asarray(x, dtype=float))

def std_normal_quantile(q):
    """
    The inverse of Phi. Scalars must lie strictly inside (0, 1); arrays are
    passed through element-wise.
    """
    if np.ndim(q) == 0:
        q = float(q)
        if not 0.0 < q < 1.0:
            raise NumericsError("Quantile requires 0 < q < 1; received %(q)r" % {
             'q': q,
            }, {'q': q})
        return float(special.ndtri(q))
    return special.ndtri(np.asarray(q, dtype=float))

def _quadrature_tail(k, t, tol, rel_tol, logger):
    """
    I(k, t) for t >= `_SERIES_LIMIT`, after u = y^2/2.
    """
    power = 0.5 * (k - 1)
    scale = 2.0 ** power
    spec = semi_infinite(
     lambda u: np.power(u, power) * np.exp(-u),
     0.5 * t * t, decay=DECAY_EXPONENTIAL,
    )
    result = quadrature.integrate(spec, tol=max(tol / scale, quadrature.MINIMUM_TOLERANCE), rel_tol=rel_tol, logger=logger)
    return scale * result.value

def _series_tail(k, t, scale, unit_tail):
    """
    scale * I(k, t) for 0 < t < `_SERIES_LIMIT` and k <= -1, as
    scale * (I(k, 1) + integral from t to 1 of y^k exp(-y^2/2) dy) with the
    exponential expanded term by term. Powers of t are formed from log(t), so
    neither t^2 underflowing nor t^k overflowing loses the result.
    """
    log_t = math.log(t)
    log_scale = math.log(scale)
    if log_scale + (k + 1) * log_t > _LOG_FLOAT_MAX:
        return math.inf

    terms = [scale * unit_tail]
    coefficient = 1.0
    for n in range(_SERIES_TERMS):
        exponent = k + 2 * n + 1
        if exponent == 0:
            segment = -log_t * scale
        elif exponent < 0:
            segment = (math.exp(log_scale + exponent * log_t) - scale) / -exponent
        else:
            segment = scale * -math.expm1(exponent * log_t) / exponent
        terms.append(coefficient * segment)
        coefficient *= -0.5 / (n + 1)
    return math.fsum(terms)

def gaussian_power_tail(k, t, tol=DEFAULT_TAIL_TOLERANCE, rel_tol=DEFAULT_TAIL_RELATIVE_TOLERANCE, logger=None, scale=1.0):
    """
    Evaluates `scale` times the integral of y^k exp(-y^2/2) over [`t`, inf).

    k = 1 and k = 0 have closed forms, exp(-t^2/2) and sqrt(2 pi)(1 - Phi(t)).
    For other orders and t >= 1 the integral is mapped by u = y^2/2 onto

        2^((k-1)/2) * integral from t^2/2 to inf of u^((k-1)/2) exp(-u) du

    and integrated adaptively; below t = 1 the remainder over [t, 1] is summed
    as a power series. `scale` is applied before any power of t is formed, so
    a large integral scaled back into range stays finite; a scaled value
    beyond the float range is returned as inf.

    `tol` is absolute in the scale of the unscaled integral. For k <= -1 and
    t = 0 the integral diverges and `DivergentAtOrigin` is raised; very large
    `t` underflows to 0.
    """
    order = k if isinstance(k, TailOrder) else TailOrder(k)
    t = float(t)
    scale = float(scale)
    if not (math.isfinite(t) and t >= 0.0):
        raise NumericsError("Tail integrals require a finite t >= 0; received %(t)r" % {
         't': t,
        }, {'t': t})
    if not (math.isfinite(scale) and scale > 0.0):
        raise NumericsError("Tail integrals require a finite scale > 0; received %(scale)r" % {
         'scale': scale,
        }, {'scale': scale})

    if order.k == 1:
        return scale * math.exp(-0.5 * t * t)
    if order.k == 0:
        return scale * SQRT_2PI * std_normal_sf(t)

    if t == 0.0:
        raise DivergentAtOrigin("The tail integral of order %(k)i diverges at t = %(t)r" % {
         'k': order.k,
         't': t,
        }, {'k': order.k, 't': t})
    if t >= _SERIES_LIMIT:
        return scale * _quadrature_tail(order.k, t, tol, rel_tol, logger)
    unit_tail = _quadrature_tail(order.k, _SERIES_LIMIT, tol, rel_tol, logger)
    return _series_tail(order.k, t, scale, unit_tail)


#Exceptions
###############################################################################
class InvalidTailOrder(NumericsError, ValueError):
    """
    Indicates that a tail order outside k <= 1 was requested.
    """
