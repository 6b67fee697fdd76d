"""
hypercubix.model
================

The hypercubically-contoured family of densities with standard normal
marginals: closed forms, the uniform correlation mixture and its numerical
oracle, the Khintchine sampler, and correlation inference built on the
closed-form marginal.

Usage
-----

Importing this package is recommended over importing individual modules.

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
from hypercubix.model.model_core import (
 Point, Correlation, DensityValue, INFINITE_AT_ORIGIN,
 as_point, as_correlation, require_dimension,
 ModelException, ModelError,
 InvalidPoint, InvalidDimension, InvalidCorrelation, SingularCorrelation,
 UndefinedArgmin, InvalidArgument, InvalidTolerance,
)

from hypercubix.model.density import (
 exponent_g, exponent_g_values, exponent_g_derivative, exponent_argmin, exponent_minimum,
 conditional_density, closed_form_density2,
 density_profile, density_p, marginalize_last, maxnorm_cdf,
 DEFAULT_MARGINAL_TOLERANCE,
)

from hypercubix.model.mixture import (
 mixture_density_by_quadrature, laplace_identity_check, split_point_consistency,
 IdentityCheck, SplitReport,
 SHORT_CIRCUIT_NORM, DEFAULT_MIXTURE_TOLERANCE,
)

from hypercubix.model.bayes import (
 posterior_rho_density, bayes_factor_rho0, posterior_curve, chebyshev_grid,
 PosteriorCurve,
 MINIMUM_GRID_SIZE, DEFAULT_GRID_SIZE, NORMALIZATION_RESIDUAL_LIMIT,
)

from hypercubix.model.khintchine import (
 SampleBatch, GENERATOR_ID, ROWS_PER_BLOCK,
 sample_chi3, sample_joint, sample_radii,
 empirical_maxnorm_cdf, ks_statistic, ks_critical_value,
)
