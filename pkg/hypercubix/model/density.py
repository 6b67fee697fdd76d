"""
hypercubix.model.density
========================

The family of hypercubically-contoured densities with standard normal
marginals,

    f_p(x) = 2^(1-p) (2 pi)^(-1/2) * integral from |x|_inf to inf of y^(2-p) exp(-y^2/2) dy,

the conditional bivariate normal density they are built from, and the analysis
of its exponent profile g(rho) that underpins the closed form in two
dimensions, f_2(x) = (1 - Phi(|x|_inf)) / 2.

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
import math

from hypercubix.numerics import (
 integrate, finite, semi_infinite,
 DECAY_GAUSSIAN,
 DivergentAtOrigin,
 TailOrder, gaussian_power_tail,
 std_normal_pdf, std_normal_sf,
 INV_SQRT_2PI,
)
from hypercubix.numerics.specfun import DEFAULT_TAIL_TOLERANCE
from hypercubix.model.model_core import (
 as_point, as_correlation, require_dimension,
 DensityValue, INFINITE_AT_ORIGIN,
 InvalidArgument, InvalidTolerance, UndefinedArgmin,
)

DEFAULT_MARGINAL_TOLERANCE = 1e-10
MINIMUM_MARGINAL_TOLERANCE = 1e-12

_TWO_PI = 2.0 * math.pi


#Functions
###############################################################################
def _one_minus_square(rho):
    """
    1 - rho^2, factored to keep its digits as |rho| approaches 1.
    """
    return (1.0 - rho) * (1.0 + rho)

def _require_tolerance(tol, minimum):
    if not tol >= minimum:
        raise InvalidTolerance("Tolerance must be at least %(minimum)r; received %(tol)r" % {
         'minimum': minimum,
         'tol': tol,
        }, {'tol': tol})

def _square_terms(point):
    """
    (u, v): the coordinate of larger magnitude first, ties broken towards the
    larger value so that swapping coordinates gives the same pair.
    """
    (x1, x2) = point
    if abs(x1) > abs(x2) or (abs(x1) == abs(x2) and x1 >= x2):
        return (x1, x2)
    return (x2, x1)

def exponent_g_values(x, rho, one_minus_square):
    """
    g at correlations `rho` (a scalar or array, not validated) given
    1 - rho^2 as `one_minus_square`, in completed-square form

        g(rho) = (u - rho v)^2 / (2 (1 - rho^2)) + v^2 / 2.

    It keeps its digits as |rho| approaches 1, also when |x1| = |x2|.
    Callers integrating over rho = sin(theta) pass cos(theta)^2.
    """
    (u, v) = _square_terms(as_point(x, 2))
    residual = u - rho * v
    return residual * residual / (2.0 * one_minus_square) + 0.5 * v * v

def exponent_g(x, rho):
    """
    The exponent of the conditional bivariate normal density as a function of
    the correlation,

        g(rho) = (x1^2 + x2^2 - 2 rho x1 x2) / (2 (1 - rho^2)),

    which is non-negative and identically 0 at the origin.
    """
    rho = as_correlation(rho)
    return exponent_g_values(x, float(rho), _one_minus_square(rho))

def exponent_g_derivative(x, rho):
    """
    d g / d rho = -(rho x1 - x2)(rho x2 - x1) / (1 - rho^2)^2.
    """
    (x1, x2) = as_point(x, 2)
    rho = as_correlation(rho)
    denominator = _one_minus_square(rho)
    return -(rho * x1 - x2) * (rho * x2 - x1) / (denominator * denominator)

def exponent_argmin(x):
    """
    The correlation at which g attains its minimum,

        a(x1, x2) = sgn(x1 x2) * min(|x1|, |x2|) / max(|x1|, |x2|).

    g is nonincreasing on (-1, a] and nondecreasing on [a, 1). When
    |x1| = |x2| the minimiser sits on the boundary, +-1; when either coordinate
    is 0, sgn(0) = 0 gives a = 0.

    `UndefinedArgmin` is raised at the origin, where g is flat.
    """
    (x1, x2) = as_point(x, 2)
    if x1 == 0.0 and x2 == 0.0:
        raise UndefinedArgmin("The exponent profile has no unique minimiser at the origin")
    sign = _sign(x1) * _sign(x2)
    (small, large) = sorted((abs(x1), abs(x2)))
    return as_correlation(sign * (small / large), regular=False)

def _sign(value):
    return (value > 0) - (value < 0)

def exponent_minimum(x):
    """
    The minimum of g over the correlation, g(a(x)) = max(x1^2, x2^2) / 2.
    """
    point = as_point(x, 2)
    return 0.5 * point.max_norm * point.max_norm

def conditional_density(x, rho):
    """
    The bivariate normal density with unit variances and correlation `rho`.

    `SingularCorrelation` is raised for |rho| = 1.
    """
    point = as_point(x, 2)
    rho = as_correlation(rho)
    return math.exp(-exponent_g(point, rho)) / (_TWO_PI * math.sqrt(_one_minus_square(rho)))

def closed_form_density2(x):
    """
    The uniform correlation mixture in closed form, (1 - Phi(|x|_inf)) / 2.
    """
    point = as_point(x, 2)
    return 0.5 * std_normal_sf(point.max_norm)

def density_profile(p, m, tol=DEFAULT_TAIL_TOLERANCE, logger=None):
    """
    The density in dimension `p` as a function of the max-norm `m` alone,
    h_p(m), as a `DensityValue`.

    p = 1 and p = 2 use the closed forms phi(m) and (1 - Phi(m)) / 2; higher
    dimensions integrate the power tail, and at m = 0 return
    `INFINITE_AT_ORIGIN`. A non-zero m so small that h_p(m) exceeds the float
    range gives inf with `infinite` False.
    """
    p = require_dimension(p)
    m = float(m)
    if p == 1:
        return DensityValue.finite(std_normal_pdf(m))
    if p == 2:
        return DensityValue.finite(0.5 * std_normal_sf(m))
    try:
        return DensityValue.finite(gaussian_power_tail(
         TailOrder.for_dimension(p), m, tol=tol, logger=logger,
         scale=2.0 ** (1 - p) * INV_SQRT_2PI,
        ))
    except DivergentAtOrigin:
        return INFINITE_AT_ORIGIN

def density_p(x, tol=DEFAULT_TAIL_TOLERANCE, logger=None):
    """
    Evaluates f_p at the point `x`, whose dimension fixes p.

    Only the max-norm of `x` is consulted, so points on the same hypercube
    give bit-identical values.
    """
    point = as_point(x)
    return density_profile(point.dimension, point.max_norm, tol=tol, logger=logger)

def marginalize_last(p, x_prefix, tol=DEFAULT_MARGINAL_TOLERANCE, logger=None):
    """
    Integrates the last coordinate out of f_p at `x_prefix`, a point in
    dimension p - 1, using

        2 m h_p(m) + 2 * integral from m to inf of h_p(u) du,   m = |x_prefix|_inf,

    with the tail integral done by quadrature over the profile. The result
    should reproduce f_(p-1)(x_prefix); for p >= 4 at the origin it is inf.
    """
    p = require_dimension(p, minimum=2)
    prefix = as_point(x_prefix, p - 1)
    _require_tolerance(tol, MINIMUM_MARGINAL_TOLERANCE)
    m = prefix.max_norm

    if m == 0.0:
        if p >= 4:
            return math.inf
        boundary = 0.0 #m h_p(m) -> 0 as m -> 0 for p <= 3
    else:
        boundary = 2.0 * m * density_profile(p, m, logger=logger).value

    profile = lambda u: density_profile(p, u, logger=logger).value
    tail = integrate(
     semi_infinite(profile, m, decay=DECAY_GAUSSIAN, vectorized=False),
     tol=0.25 * tol, logger=logger,
    )
    return boundary + 2.0 * tail.value

def maxnorm_cdf(p, a, tol=DEFAULT_MARGINAL_TOLERANCE, logger=None):
    """
    P(|X|_inf <= a) under f_p, from the shell measure of the hypercube,

        integral from 0 to a of p 2^p m^(p-1) h_p(m) dm.

    `a` may be inf, in which case the result is 1 up to quadrature error.
    """
    p = require_dimension(p)
    a = float(a)
    if math.isnan(a) or a < 0.0:
        raise InvalidArgument("The max-norm bound must be non-negative; received %(a)r" % {
         'a': a,
        }, {'a': a})
    if a == 0.0:
        return 0.0

    shell = p * 2.0 ** p
    integrand = lambda m: shell * m ** (p - 1) * density_profile(p, m, logger=logger).value
    if math.isinf(a):
        spec = semi_infinite(integrand, 0.0, decay=DECAY_GAUSSIAN, vectorized=False)
    else:
        spec = finite(integrand, 0.0, a, vectorized=False)
    return integrate(spec, tol=tol, logger=logger).value
