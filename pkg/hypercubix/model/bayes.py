"""
hypercubix.model.bayes
======================

Inference on the correlation of a single bivariate observation with unit
variances, under a uniform prior on rho. Because the prior-marginal density is
known in closed form, the posterior

    pi(rho | x) = f(x | rho) / 2 / f(x)

and the Bayes factor for rho = 0, f(x | 0) / f(x), are both explicit.

Everything is evaluated in log space, with log(1 - Phi(m)) taken from
`scipy.special.log_ndtr`, so observations far in the tails neither underflow
nor lose their relative accuracy.

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
from scipy import special

from hypercubix.numerics import (
 integrate, finite,
 NotConverged, NumericsError,
)
from hypercubix.numerics.numerics_core import emit_warning
from hypercubix.model.model_core import (
 as_point, as_correlation,
 InvalidArgument,
)
from hypercubix.model.density import exponent_g, exponent_g_values
from hypercubix.model.mixture import theta_intervals

MINIMUM_GRID_SIZE = 16
DEFAULT_GRID_SIZE = 64
DEFAULT_NORMALIZATION_TOLERANCE = 1e-10
NORMALIZATION_RESIDUAL_LIMIT = 1e-6 #Largest |normalization_residual| of a usable curve

_LOG_TWO_PI = math.log(2.0 * math.pi)
_LOG_FOUR_PI = math.log(4.0 * math.pi)
_LOG_HALF = math.log(0.5)

PosteriorCurve = collections.namedtuple('PosteriorCurve', (
 'rho_grid', 'density_values', 'normalization_residual',
)) #Posterior density on an ascending Chebyshev grid in (-1, 1)


#Functions
###############################################################################
def _log_marginal(point):
    """
    log f(x) = log(1/2) + log(1 - Phi(|x|_inf)).
    """
    return _LOG_HALF + float(special.log_ndtr(-point.max_norm))

def _log_posterior(point, rho, g):
    """
    log pi(rho | x), given g = g(rho); the two halves cancel:
    -log(2 pi) - log(1 - rho^2) / 2 - g - log(1 - Phi(m)).
    """
    return -_LOG_TWO_PI - 0.5 * np.log((1.0 - rho) * (1.0 + rho)) - g - (_log_marginal(point) - _LOG_HALF)

def posterior_rho_density(x, rho):
    """
    The posterior density of the correlation at `rho` given the observation
    `x`, under the uniform prior on [-1, 1].

    `SingularCorrelation` is raised for |rho| = 1.
    """
    point = as_point(x, 2)
    rho = as_correlation(rho)
    return math.exp(_log_posterior(point, float(rho), exponent_g(point, rho)))

def bayes_factor_rho0(x):
    """
    The Bayes factor for rho = 0 against the uniform prior,
    f(x | 0) / f(x) = exp(-(x1^2 + x2^2) / 2) / (2 pi) / ((1 - Phi(|x|_inf)) / 2).
    """
    point = as_point(x, 2)
    (x1, x2) = point
    return math.exp(-0.5 * (x1 * x1 + x2 * x2) - _LOG_TWO_PI - _log_marginal(point))

def chebyshev_grid(size):
    """
    The `size` Chebyshev nodes -cos((2j - 1) pi / (2 size)), j = 1..size, in
    ascending order; all lie strictly inside (-1, 1).
    """
    j = np.arange(1, size + 1, dtype=float)
    return -np.cos((2.0 * j - 1.0) * np.pi / (2.0 * size))

def _normalization_residual(point, tol, logger):
    """
    Integrates the posterior over (-1, 1) in theta, rho = sin(theta), where it
    becomes exp(-g(sin theta)) / (4 pi f(x)), and subtracts 1.
    """
    offset = _LOG_FOUR_PI + _log_marginal(point)
    def integrand(theta):
        cosine = np.cos(theta)
        return np.exp(-exponent_g_values(point, np.sin(theta), cosine * cosine) - offset)

    total = 0.0
    for (lo, hi) in theta_intervals(point):
        try:
            total += integrate(finite(integrand, lo, hi), tol=tol, logger=logger).value
        except NotConverged as e:
            emit_warning(logger, "Posterior normalisation did not converge on [%(lo)r, %(hi)r]" % {
             'lo': lo,
             'hi': hi,
            })
            total += e.result.value
        except NumericsError as e:
            emit_warning(logger, "Posterior normalisation failed: %(error)s" % {
             'error': str(e),
            })
            return math.nan
    return total - 1.0

def posterior_curve(x, grid_size=DEFAULT_GRID_SIZE, tol=DEFAULT_NORMALIZATION_TOLERANCE, logger=None):
    """
    Evaluates the posterior of rho given `x` on a Chebyshev grid of
    `grid_size` >= 16 points, returning a `PosteriorCurve`.

    Quadrature problems do not raise; they surface only in
    `normalization_residual`, which is nan if the integral could not be
    formed at all.
    """
    point = as_point(x, 2)
    if isinstance(grid_size, bool) or int(grid_size) != grid_size or grid_size < MINIMUM_GRID_SIZE:
        raise InvalidArgument("Grid size must be an integer >= %(minimum)i; received %(size)r" % {
         'minimum': MINIMUM_GRID_SIZE,
         'size': grid_size,
        }, {'grid_size': grid_size})

    rho = chebyshev_grid(int(grid_size))
    g = exponent_g_values(point, rho, (1.0 - rho) * (1.0 + rho))
    values = np.exp(_log_posterior(point, rho, g))
    return PosteriorCurve(rho, values, _normalization_residual(point, tol, logger))
