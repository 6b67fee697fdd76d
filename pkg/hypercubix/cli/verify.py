"""
hypercubix.cli.verify
=====================

Verification suites that compare the closed forms against independent
numerical oracles and sampled data. Each suite contributes a list of named
cases; a case evaluates to a (value, reference) pair that passes when the two
agree within the suite's threshold.

Thresholds for quadrature-based comparisons are the larger of a fixed
acceptance bound and ten times the requested tolerance; comparisons between
closed forms use the fixed bound alone.

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
import concurrent.futures
import math

import numpy as np

from hypercubix.numerics import std_normal_pdf
from hypercubix.model import (
 closed_form_density2, density_p, marginalize_last, maxnorm_cdf,
 mixture_density_by_quadrature, laplace_identity_check,
 posterior_curve, bayes_factor_rho0,
 sample_joint, sample_radii, empirical_maxnorm_cdf, ks_statistic, ks_critical_value,
 GENERATOR_ID, DEFAULT_MARGINAL_TOLERANCE,
)
from hypercubix.model.mixture import MINIMUM_MIXTURE_TOLERANCE
from hypercubix.cli.transforms import CLIException, lattice_axis

MINIMUM_TOLERANCE = 1e-12
MAXIMUM_TOLERANCE = 1e-8 #Loosest quadrature tolerance accepted; acceptance thresholds never depend on it
DEFAULT_TOLERANCE = 1e-12

SUITE_MIXTURE = 'mixture'
SUITE_LAPLACE = 'laplace'
SUITE_MARGINAL = 'marginal'
SUITE_POSTERIOR = 'posterior'
SUITE_SAMPLER = 'sampler'
SUITES = (SUITE_MIXTURE, SUITE_LAPLACE, SUITE_MARGINAL, SUITE_POSTERIOR, SUITE_SAMPLER)
DEFAULT_SUITES = (SUITE_MIXTURE, SUITE_LAPLACE, SUITE_MARGINAL, SUITE_POSTERIOR) #The sampler suite is statistical and runs only on request

DEFAULT_SAMPLER_SEED = 1
DEFAULT_SAMPLER_SIZE = 200000
DEFAULT_SAMPLER_DIMENSION = 2
KS_ALPHA = 0.01

_SUITE_REGISTRY = {} #Maps suite names to their classes; populated at the end of this module

Check = collections.namedtuple('Check', (
 'suite', 'name', 'value', 'reference', 'abs_error', 'threshold', 'passed',
)) #The outcome of one comparison

_Case = collections.namedtuple('_Case', ('name', 'evaluate', 'threshold', 'comparison'))

_COMPARE_ABSOLUTE = 'absolute' #|value - reference| <= threshold
_COMPARE_UPPER = 'upper' #value <= reference + threshold


#Classes
###############################################################################
class _Suite(object):
    """
    The base class for verification suites. Subclasses set `name` and
    implement `cases()`.
    """
    name = None #The name by which the suite is selected
    _tol = None #The requested quadrature tolerance
    _logger = None

    def __init__(self, tol, logger=None):
        self._tol = tol
        self._logger = logger

    def cases(self):
        """
        Provides a list of `_Case` objects in report order.
        """
        raise NotImplementedError("cases() must be overridden")

class MixtureSuite(_Suite):
    """
    Direct quadrature of the uniform correlation mixture against the closed
    form over a 21-by-21 lattice on [-3, 3]^2.
    """
    name = SUITE_MIXTURE
    AXIS = lattice_axis(-3.0, 3.0, 21)
    ACCEPTANCE = 1e-8

    def cases(self):
        tol = max(self._tol, MINIMUM_MIXTURE_TOLERANCE)
        def evaluate(x):
            return lambda: (
             mixture_density_by_quadrature(x, tol=tol, logger=self._logger).value,
             closed_form_density2(x),
            )
        return [
         _Case('f(%r, %r)' % x, evaluate(x), self.ACCEPTANCE, _COMPARE_ABSOLUTE)
         for x in ((x1, x2) for x1 in self.AXIS for x2 in self.AXIS)
        ]

class LaplaceSuite(_Suite):
    """
    Both sides of the Laplace-transform identity at five abscissae.
    """
    name = SUITE_LAPLACE
    ABSCISSAE = (0.25, 0.5, 1.0, 2.0, 4.0)
    ACCEPTANCE = 1e-10

    def cases(self):
        tol = max(0.1 * self._tol, MINIMUM_MIXTURE_TOLERANCE)
        def evaluate(x1):
            return lambda: tuple(laplace_identity_check(x1, tol=tol, logger=self._logger))
        return [
         _Case('laplace(%r)' % x1, evaluate(x1), self.ACCEPTANCE, _COMPARE_ABSOLUTE)
         for x1 in self.ABSCISSAE
        ]

class MarginalSuite(_Suite):
    """
    Marginal normality of the bivariate density and the marginalisation
    relation between consecutive dimensions.
    """
    name = SUITE_MARGINAL
    NORMALITY_ABSCISSAE = (0.0, 0.5, 1.0, 2.0, 3.0)
    NORMALITY_ACCEPTANCE = 1e-8
    MAX_NORMS = (0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0)
    DIMENSIONS = (2, 3, 4)
    CONSISTENCY_ACCEPTANCE = 1e-6

    def cases(self):
        tol = max(self._tol, DEFAULT_MARGINAL_TOLERANCE)
        cases = []
        def normality(x1):
            return lambda: (marginalize_last(2, (x1,), tol=tol, logger=self._logger), std_normal_pdf(x1))
        for x1 in self.NORMALITY_ABSCISSAE:
            cases.append(_Case(
             'normal-marginal(%r)' % x1, normality(x1),
             self.NORMALITY_ACCEPTANCE, _COMPARE_ABSOLUTE,
            ))

        def consistency(p, prefix):
            return lambda: (
             marginalize_last(p, prefix, tol=tol, logger=self._logger),
             density_p(prefix, logger=self._logger).value,
            )
        for p in self.DIMENSIONS:
            for m in self.MAX_NORMS:
                prefix = marginal_prefix(p, m)
                cases.append(_Case(
                 'marginalize-p%i%r' % (p, prefix), consistency(p, prefix),
                 self.CONSISTENCY_ACCEPTANCE, _COMPARE_ABSOLUTE,
                ))
        return cases

class PosteriorSuite(_Suite):
    """
    Normalisation of the posterior of rho at nine observations, the arcsine
    law at the origin and the Bayes factor there.
    """
    name = SUITE_POSTERIOR
    OBSERVATIONS = (
     (0.0, 0.0), (1.0, 0.0), (0.0, 1.0),
     (1.0, 1.0), (1.0, -1.0), (2.0, 1.0),
     (-1.5, 0.5), (3.0, -2.0), (0.5, 2.5),
    )
    NORMALIZATION_ACCEPTANCE = 1e-8
    ARCSINE_GRID = 64
    ARCSINE_ACCEPTANCE = 1e-10
    BAYES_FACTOR_ACCEPTANCE = 1e-12

    def cases(self):
        tol = max(0.1 * self._tol, MINIMUM_TOLERANCE)
        cases = []
        def normalization(x):
            return lambda: (1.0 + posterior_curve(x, tol=tol, logger=self._logger).normalization_residual, 1.0)
        for x in self.OBSERVATIONS:
            cases.append(_Case(
             'normalization(%r, %r)' % x, normalization(x),
             self.NORMALIZATION_ACCEPTANCE, _COMPARE_ABSOLUTE,
            ))

        def arcsine():
            curve = posterior_curve((0.0, 0.0), self.ARCSINE_GRID, tol=tol, logger=self._logger)
            reference = 1.0 / (math.pi * np.sqrt((1.0 - curve.rho_grid) * (1.0 + curve.rho_grid)))
            return (float(np.max(np.abs(curve.density_values - reference))), 0.0)
        cases.append(_Case('arcsine-law', arcsine, self.ARCSINE_ACCEPTANCE, _COMPARE_ABSOLUTE))
        cases.append(_Case(
         'bayes-factor(0.0, 0.0)', lambda: (bayes_factor_rho0((0.0, 0.0)), 2.0 / math.pi),
         self.BAYES_FACTOR_ACCEPTANCE, _COMPARE_ABSOLUTE,
        ))
        return cases

class SamplerSuite(_Suite):
    """
    Kolmogorov-Smirnov marginal normality of a sample, its max-norm
    distribution against the shell-measure quadrature and, when the sample
    can be regenerated, the bound |X_i| <= Y on every row.
    """
    name = SUITE_SAMPLER
    MAXNORM_BOUND = 1.0
    MAXNORM_SIGMAS = 3.0

    _batch = None

    def __init__(self, tol, logger=None, batch=None):
        _Suite.__init__(self, tol, logger)
        self._batch = batch

    def _sample(self):
        if self._batch is None:
            self._batch = sample_joint(DEFAULT_SAMPLER_DIMENSION, DEFAULT_SAMPLER_SIZE, DEFAULT_SAMPLER_SEED, logger=self._logger)
        return self._batch

    def cases(self):
        batch = self._sample()
        critical = ks_critical_value(batch.n, KS_ALPHA)
        cases = []
        def ks(column):
            return lambda: (ks_statistic(batch.data[:, column]), 0.0)
        for column in range(batch.p):
            cases.append(_Case('ks(x%i)' % (column + 1), ks(column), critical, _COMPARE_UPPER))

        def maxnorm():
            q = maxnorm_cdf(batch.p, self.MAXNORM_BOUND, tol=max(self._tol, MINIMUM_TOLERANCE), logger=self._logger)
            binomial_error = math.sqrt(q * (1.0 - q) / batch.n)
            return (empirical_maxnorm_cdf(batch, self.MAXNORM_BOUND), q, self.MAXNORM_SIGMAS * binomial_error)
        cases.append(_Case('maxnorm-cdf(%r)' % self.MAXNORM_BOUND, maxnorm, None, _COMPARE_ABSOLUTE))

        if batch.generator_id == GENERATOR_ID:
            def radius_bound():
                radii = sample_radii(batch.p, batch.n, batch.seed)
                return (float(np.max(np.max(np.abs(batch.data), axis=1) - radii)), 0.0)
            cases.append(_Case('row-radius-bound', radius_bound, 0.0, _COMPARE_UPPER))
        return cases


#Functions
###############################################################################
def marginal_prefix(p, m):
    """
    A point in dimension p - 1 with max-norm `m` and mixed signs.
    """
    return (m, -0.5 * m, m / 3.0)[:p - 1]

def build_suites(names, tol, logger=None, batch=None):
    """
    Instantiates the named suites, in the order given.
    """
    if not MINIMUM_TOLERANCE <= tol <= MAXIMUM_TOLERANCE:
        raise VerificationError("Tolerance must lie in [%(minimum)r, %(maximum)r]; received %(tol)r" % {
         'minimum': MINIMUM_TOLERANCE,
         'maximum': MAXIMUM_TOLERANCE,
         'tol': tol,
        }, {'tol': tol})
    suites = []
    for name in names:
        suite_class = _SUITE_REGISTRY.get(name)
        if suite_class is None:
            raise VerificationError("Unknown verification suite %(name)r" % {
             'name': name,
            }, {'suite': name})
        if suite_class is SamplerSuite:
            suites.append(suite_class(tol, logger, batch=batch))
        else:
            suites.append(suite_class(tol, logger))
    return suites

def _judge(suite, case, outcome):
    """
    Builds the `Check` for a case's outcome: (value, reference), or
    (value, reference, threshold) for cases whose threshold depends on the
    reference.
    """
    (value, reference) = (float(outcome[0]), float(outcome[1]))
    threshold = float(outcome[2]) if len(outcome) > 2 else case.threshold
    if case.comparison == _COMPARE_UPPER:
        abs_error = max(value - reference, 0.0) #nan survives this order
    else:
        abs_error = abs(value - reference)
    passed = abs_error <= threshold #False for nan
    return Check(suite.name, case.name, value, reference, abs_error, threshold, passed)

def run_suites(suites, jobs=1, logger=None):
    """
    Evaluates every case of every suite in `suites`, returning `Check`s in
    suite and case order regardless of `jobs`.

    Numerical failures propagate as the `NumericsError` raised by the case.
    """
    work = [(suite, case) for suite in suites for case in suite.cases()]
    if logger:
        logger.info("Running %(count)i checks across %(suites)s" % {
         'count': len(work),
         'suites': ', '.join(s.name for s in suites),
        })
    if jobs > 1 and len(work) > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as executor:
            outcomes = list(executor.map(lambda item: item[1].evaluate(), work))
    else:
        outcomes = [case.evaluate() for (_, case) in work]
    checks = [_judge(suite, case, outcome) for ((suite, case), outcome) in zip(work, outcomes)]
    if logger:
        for check in checks:
            if not check.passed:
                logger.warning("Check %(suite)s/%(name)s failed: |%(value)r - %(reference)r| > %(threshold)r" % check._asdict())
    return checks


#Exceptions
###############################################################################
class VerificationError(CLIException, ValueError):
    """
    Indicates that a verification run was misconfigured.
    """

class VerificationFailure(CLIException):
    """
    Indicates that at least one check failed; exit status 1.
    """


for _suite_class in (MixtureSuite, LaplaceSuite, MarginalSuite, PosteriorSuite, SamplerSuite):
    _SUITE_REGISTRY[_suite_class.name] = _suite_class
del _suite_class
