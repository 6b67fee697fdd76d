"""
hypercubix.numerics.numerics_core
=================================

The plumbing shared by every numerical routine, regardless of what is being
integrated or evaluated: result containers, integrand descriptions and the
exception hierarchy.

Usage
-----

This module should not be used directly; instead, import `specfun` or
`quadrature`, or the `hypercubix.numerics` package itself.

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
import warnings

DOMAIN_FINITE = 'finite' #[a, b]
DOMAIN_SEMI_INFINITE = 'semi-infinite' #[a, inf)

HINT_LEFT_INVERSE_SQRT = 'left-endpoint-inverse-sqrt' #f ~ (x - a)^(-1/2) near a
HINT_RIGHT_INVERSE_SQRT = 'right-endpoint-inverse-sqrt' #f ~ (b - x)^(-1/2) near b

DECAY_GAUSSIAN = 'gaussian' #Tail dominated by exp(-y^2/2)
DECAY_EXPONENTIAL = 'exponential' #Tail dominated by exp(-u)

_HINTS = frozenset((HINT_LEFT_INVERSE_SQRT, HINT_RIGHT_INVERSE_SQRT))
_DECAYS = frozenset((DECAY_GAUSSIAN, DECAY_EXPONENTIAL))

QuadratureResult = collections.namedtuple('QuadratureResult', (
 'value', 'abs_error_estimate', 'evaluations', 'converged',
)) #The outcome of a one-dimensional integration


#Functions
###############################################################################
def emit_warning(logger, message):
    """
    Sends `message` to `logger` at WARNING level or, if no logger was supplied,
    through the Python warnings interface.
    """
    (logger and logger.warning or warnings.warn)(message)

def emit_debug(logger, message, values):
    """
    Formats `message` with the `values` dictionary and sends it to `logger` at
    DEBUG level; a no-op if no logger was supplied.
    """
    if logger:
        logger.debug(message % values)


#Classes
###############################################################################
class IntegrandSpec(object):
    """
    Describes a one-dimensional integration problem: the integrand, its domain
    and any endpoint singularities the integrator should remove before
    sampling.

    `f` must accept a numpy array of abscissae and return an array of the same
    shape, unless `vectorized` is `False`, in which case it is called once per
    point with a float. It must be reentrant and finite on the open interior of
    the domain.
    """
    f = None #The integrand
    a = None #The lower limit
    b = None #The upper limit; None for semi-infinite domains
    domain = None #DOMAIN_FINITE or DOMAIN_SEMI_INFINITE
    decay = None #For semi-infinite domains, the envelope that bounds the tail
    hints = None #A frozenset of singularity hints
    vectorized = True #False if `f` only accepts scalars

    def __init__(self, f, a, b=None, domain=DOMAIN_FINITE, decay=DECAY_GAUSSIAN, hints=(), vectorized=True):
        self.f = f
        self.a = float(a)
        self.domain = domain
        self.decay = decay
        self.hints = frozenset(hints)
        self.vectorized = vectorized

        if domain == DOMAIN_FINITE:
            if b is None:
                raise InvalidIntegrand("A finite domain requires an upper limit")
            self.b = float(b)
            if not self.a < self.b:
                raise InvalidIntegrand("Finite domain requires a < b; received [%(a)r, %(b)r]" % {
                 'a': self.a,
                 'b': self.b,
                }, {'a': self.a, 'b': self.b})
        elif domain == DOMAIN_SEMI_INFINITE:
            if not decay in _DECAYS:
                raise InvalidIntegrand("Unsupported tail decay: %(decay)r" % {
                 'decay': decay,
                })
            if HINT_RIGHT_INVERSE_SQRT in self.hints:
                raise InvalidIntegrand("A semi-infinite domain has no right endpoint to hint")
        else:
            raise InvalidIntegrand("Unsupported domain: %(domain)r" % {
             'domain': domain,
            })

        unknown = self.hints - _HINTS
        if unknown:
            raise InvalidIntegrand("Unsupported singularity hints: %(hints)s" % {
             'hints': ', '.join(sorted(unknown)),
            })

    def __repr__(self):
        return 'IntegrandSpec(%(domain)s, a=%(a)r, b=%(b)r, hints=%(hints)r)' % {
         'domain': self.domain,
         'a': self.a,
         'b': self.b,
         'hints': sorted(self.hints),
        }

def finite(f, a, b, hints=(), vectorized=True):
    """
    Builds an `IntegrandSpec` over the finite interval [`a`, `b`].
    """
    return IntegrandSpec(f, a, b, domain=DOMAIN_FINITE, hints=hints, vectorized=vectorized)

def semi_infinite(f, a, decay=DECAY_GAUSSIAN, hints=(), vectorized=True):
    """
    Builds an `IntegrandSpec` over [`a`, inf), whose tail is bounded by the
    envelope named by `decay`.
    """
    return IntegrandSpec(f, a, domain=DOMAIN_SEMI_INFINITE, decay=decay, hints=hints, vectorized=vectorized)


#Exceptions
###############################################################################
class NumericsException(Exception):
    """
    The base exception from which all exceptions native to this package inherit.
    """
    items = None #Diagnostic values describing the failure, as a dictionary.

    def __init__(self, message, items=None):
        Exception.__init__(self, message)
        self.items = items if items else {}

class NumericsError(NumericsException):
    """
    The base error from which all errors native to this package inherit.
    """

class InvalidIntegrand(NumericsError, ValueError):
    """
    Indicates that an integration problem was described inconsistently.
    """

class DivergentAtOrigin(NumericsError):
    """
    Indicates that a Gaussian power-tail integral was requested at t = 0 for an
    order whose integral diverges there.
    """

class NonFiniteEvaluation(NumericsError):
    """
    Indicates that an integrand produced a non-finite value inside its domain.
    """

class NotConverged(NumericsError):
    """
    Indicates that the evaluation budget was exhausted before the requested
    tolerance was met. The best available estimate is exposed as `result`.
    """
    result = None #The best QuadratureResult obtained

    def __init__(self, message, result, items=None):
        NumericsError.__init__(self, message, items)
        self.result = result
