"""
hypercubix.model.mixture
========================

An independent numerical oracle for the closed form of the uniform correlation
mixture: direct quadrature of

    f(x1, x2) = integral from -1 to 1 of f(x1, x2 | rho) / 2 d rho,

the Laplace-transform identity that closes the analytic argument, and a check
that splitting the mixture integral at the exponent's minimiser is consistent.

All rho-integrals are carried out in theta, with rho = sin(theta), which maps
the 1/sqrt(1 - rho^2) weight onto d(theta) and leaves a smooth integrand,
exp(-g(sin theta)) / (4 pi), on [-pi/2, pi/2].

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

import numpy as np

from hypercubix.numerics import (
 QuadratureResult,
 integrate, finite, semi_infinite,
 DECAY_GAUSSIAN,
 std_normal_sf,
)
from hypercubix.numerics.quadrature import MACHINE_EPSILON
from hypercubix.model.model_core import (
 as_point,
 InvalidArgument, InvalidTolerance,
)
from hypercubix.model.density import (
 exponent_g, exponent_g_values, exponent_argmin,
)

DEFAULT_MIXTURE_TOLERANCE = 1e-10
MINIMUM_MIXTURE_TOLERANCE = 1e-12
SHORT_CIRCUIT_NORM = 8.0 #Beyond this max-norm both sides are below 1e-15
SPLIT_LIMIT = 0.999 #The integral is split at a(x) only when |a| is below this

_HALF_PI = 0.5 * math.pi
_FOUR_PI = 4.0 * math.pi
_MONOTONE_SPOT_CHECKS = 5

IdentityCheck = collections.namedtuple('IdentityCheck', ('lhs', 'rhs')) #Two sides of an identity

SplitReport = collections.namedtuple('SplitReport', (
 'argmin', 'lower', 'upper', 'full', 'combined_error',
 'lower_monotone', 'upper_monotone', 'consistent',
)) #The outcome of `split_point_consistency()`; empty pieces are None


#Functions
###############################################################################
def _require_tolerance(tol):
    if not tol >= MINIMUM_MIXTURE_TOLERANCE:
        raise InvalidTolerance("Tolerance must be at least %(minimum)r; received %(tol)r" % {
         'minimum': MINIMUM_MIXTURE_TOLERANCE,
         'tol': tol,
        }, {'tol': tol})

def mixture_integrand(x):
    """
    Provides theta -> f(x | sin theta) cos(theta) / 2 as a vectorised callable.
    """
    point = as_point(x, 2)
    def integrand(theta):
        cosine = np.cos(theta)
        return np.exp(-exponent_g_values(point, np.sin(theta), cosine * cosine)) / _FOUR_PI
    return integrand

def _combine(results):
    return QuadratureResult(
     math.fsum(r.value for r in results),
     math.fsum(r.abs_error_estimate for r in results),
     sum(r.evaluations for r in results),
     all(r.converged for r in results),
    )

def theta_intervals(point):
    """
    The theta-intervals the mixture integral is evaluated over: one, or two
    split at asin(a(x)) when the minimiser lies well inside (-1, 1).
    """
    if point.is_origin:
        return ((-_HALF_PI, _HALF_PI),)
    a = exponent_argmin(point)
    if abs(a) < SPLIT_LIMIT:
        theta = math.asin(a)
        return ((-_HALF_PI, theta), (theta, _HALF_PI))
    return ((-_HALF_PI, _HALF_PI),)

def mixture_density_by_quadrature(x, tol=DEFAULT_MIXTURE_TOLERANCE, logger=None):
    """
    Integrates the uniform correlation mixture at `x` directly, returning a
    `QuadratureResult` whose value should match `closed_form_density2(x)`.

    For |x|_inf > `SHORT_CIRCUIT_NORM` no integration is attempted: the value
    is reported as 0 with the error bound pi * max(integrand).
    """
    point = as_point(x, 2)
    _require_tolerance(tol)

    if point.max_norm > SHORT_CIRCUIT_NORM:
        bound = math.pi * math.exp(-0.5 * point.max_norm * point.max_norm) / _FOUR_PI
        return QuadratureResult(0.0, bound, 1, bound <= tol)

    integrand = mixture_integrand(point)
    pieces = theta_intervals(point)
    return _combine([
     integrate(finite(integrand, lo, hi), tol=tol / len(pieces), logger=logger)
     for (lo, hi) in pieces
    ])

def laplace_identity_check(x1, tol=DEFAULT_MIXTURE_TOLERANCE, logger=None):
    """
    Evaluates both sides of

        integral from 1/2 to inf of exp(-x1^2 z) / (4 pi z sqrt(2z - 1)) dz = (1 - Phi(x1)) / 2

    for `x1` > 0, returning an `IdentityCheck`. The left side is integrated
    after z = (1 + u^2) / 2, which absorbs the inverse square root, and
    v = x1 u, which gives the tail a unit Gaussian envelope.
    """
    x1 = float(x1)
    if not (math.isfinite(x1) and x1 > 0.0):
        raise InvalidArgument("The Laplace identity requires a finite x1 > 0; received %(x1)r" % {
         'x1': x1,
        }, {'x1': x1})
    _require_tolerance(tol)

    square = x1 * x1
    prefactor = math.exp(-0.5 * square) * x1 / (2.0 * math.pi)
    integrand = lambda v: prefactor * np.exp(-0.5 * v * v) / (square + v * v)
    lhs = integrate(semi_infinite(integrand, 0.0, decay=DECAY_GAUSSIAN), tol=tol, logger=logger)
    return IdentityCheck(lhs.value, 0.5 * std_normal_sf(x1))

def _is_monotone(point, lo, hi, increasing):
    """
    Spot-checks the direction of g at evenly spaced interior correlations of
    (`lo`, `hi`).
    """
    rhos = [lo + (hi - lo) * i / (_MONOTONE_SPOT_CHECKS + 1) for i in range(1, _MONOTONE_SPOT_CHECKS + 1)]
    values = [exponent_g(point, rho) for rho in rhos]
    slack = 1e-12 * max(1.0, max(abs(v) for v in values))
    steps = zip(values, values[1:])
    if increasing:
        return all(b >= a - slack for (a, b) in steps)
    return all(b <= a + slack for (a, b) in steps)

def split_point_consistency(x, tol=DEFAULT_MIXTURE_TOLERANCE, logger=None):
    """
    Integrates the mixture over [-1, a] and [a, 1] separately, with
    a = exponent_argmin(x), and over [-1, 1] unsplit, returning a `SplitReport`.

    The pieces are consistent when their sum matches the unsplit integral
    within the combined error estimates. When a = +-1 the split degenerates
    to a single piece and the empty side is reported as None.

    `UndefinedArgmin` is raised at the origin.
    """
    point = as_point(x, 2)
    _require_tolerance(tol)
    a = exponent_argmin(point)
    theta = math.asin(a)
    integrand = mixture_integrand(point)

    lower = upper = None
    lower_monotone = upper_monotone = True
    if theta > -_HALF_PI:
        lower = integrate(finite(integrand, -_HALF_PI, theta), tol=tol, logger=logger)
        lower_monotone = _is_monotone(point, -1.0, float(a), increasing=False)
    if theta < _HALF_PI:
        upper = integrate(finite(integrand, theta, _HALF_PI), tol=tol, logger=logger)
        upper_monotone = _is_monotone(point, float(a), 1.0, increasing=True)
    full = integrate(finite(integrand, -_HALF_PI, _HALF_PI), tol=tol, logger=logger)

    pieces = [r for r in (lower, upper) if r is not None]
    combined_error = math.fsum([r.abs_error_estimate for r in pieces] + [full.abs_error_estimate])
    split_total = math.fsum(r.value for r in pieces)
    consistent = abs(split_total - full.value) <= combined_error + 10.0 * MACHINE_EPSILON * abs(full.value)
    return SplitReport(
     float(a), lower, upper, full, combined_error,
     lower_monotone, upper_monotone, consistent,
    )
