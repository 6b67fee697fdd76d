"""
hypercubix.numerics
===================

Special functions and adaptive quadrature used throughout hypercubix.

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
from hypercubix.numerics.numerics_core import (
 QuadratureResult, IntegrandSpec, finite, semi_infinite,
 DOMAIN_FINITE, DOMAIN_SEMI_INFINITE,
 DECAY_GAUSSIAN, DECAY_EXPONENTIAL,
 HINT_LEFT_INVERSE_SQRT, HINT_RIGHT_INVERSE_SQRT,
 NumericsException, NumericsError, InvalidIntegrand,
 DivergentAtOrigin, NonFiniteEvaluation, NotConverged,
)

from hypercubix.numerics.quadrature import (
 integrate,
 DEFAULT_TOLERANCE, DEFAULT_RELATIVE_TOLERANCE, DEFAULT_EVALUATION_BUDGET,
 MINIMUM_TOLERANCE,
)

from hypercubix.numerics.specfun import (
 TailOrder, InvalidTailOrder,
 std_normal_pdf, std_normal_cdf, std_normal_sf,
 std_normal_cdf_array, std_normal_quantile,
 SQRT_2PI, INV_SQRT_2PI,
 gaussian_power_tail,
)
