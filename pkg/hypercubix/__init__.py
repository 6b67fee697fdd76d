"""
hypercubix
==========

hypercubix is a toolkit for the family of multivariate densities whose
contours are concentric hypercubes and whose marginals are all standard
normal. In two dimensions the density is the uniform mixture over the
correlation of bivariate normals, f(x) = (1 - Phi(|x|_inf)) / 2; in general
dimension p it is the law of Y (U_1, ..., U_p) with Y ~ chi_3 and independent
U_i ~ Uniform[-1, 1].

It provides the closed forms, the numerical oracles that check them, a
reproducible sampler and exact single-observation inference on a correlation.

Usage
-----

Importing this package, or the 'numerics' or 'model' sub-packages is
recommended over importing individual modules.

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
VERSION = '1.0.0'
COPYRIGHT = '2026, the hypercubix authors'

import hypercubix.numerics
import hypercubix.model
