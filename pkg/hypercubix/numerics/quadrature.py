"""
hypercubix.numerics.quadrature
==============================

Adaptive one-dimensional integration with a 10/21-point Gauss-Kronrod pair and
global bisection, with explicit support for inverse-square-root endpoint
singularities and semi-infinite, Gaussian- or exponentially-bounded tails.

Usage
-----

Describe the problem with `finite()` or `semi_infinite()` and pass it to
`integrate()`::

    spec = finite(lambda x: x ** -0.5, 0.0, 1.0, hints=(HINT_LEFT_INVERSE_SQRT,))
    result = integrate(spec, tol=1e-12)

Endpoint singularities are removed by substitution before sampling, so the
same engine serves every integrand. Evaluation order is fixed, so results are
bit-reproducible on a given platform.

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
import heapq
import math

import numpy as np

from hypercubix.numerics.numerics_core import (
 QuadratureResult,
 IntegrandSpec,
 DOMAIN_FINITE, DOMAIN_SEMI_INFINITE,
 DECAY_GAUSSIAN,
 HINT_LEFT_INVERSE_SQRT, HINT_RIGHT_INVERSE_SQRT,
 InvalidIntegrand, NonFiniteEvaluation, NotConverged,
 emit_debug, emit_warning,
)

MACHINE_EPSILON = float(np.finfo(float).eps)
MINIMUM_TOLERANCE = 1e-14 #Absolute tolerances below this cannot be honoured
DEFAULT_TOLERANCE = 1e-10
DEFAULT_RELATIVE_TOLERANCE = 10.0 * MACHINE_EPSILON
DEFAULT_EVALUATION_BUDGET = 1000000 #Integrand evaluations, not rule applications

_TAIL_SAFETY_MARGIN = 2.0 #Added to every truncation point of a semi-infinite domain

#Abscissae of the 21-point Kronrod rule on [0, 1]; the odd entries are the
#10-point Gauss abscissae. Values as tabulated for QUADPACK's qk21.
_XGK = (
 0.995657163025808080735527280689003,
 0.973906528517171720077964012084452,
 0.930157491355708226001207180059508,
 0.865063366688984510732096688423493,
 0.780817726586416897063717578345042,
 0.679409568299024406234327365114874,
 0.562757134668604683339000099272694,
 0.433395394129247190799265943165784,
 0.294392862701460198131126603103866,
 0.148874338981631210884826001129720,
 0.000000000000000000000000000000000,
)
_WGK = (
 0.011694638867371874278064396062192,
 0.032558162307964727478818972459390,
 0.054755896574351996031381300244580,
 0.075039674810919952767043140916190,
 0.093125454583697605535065465083366,
 0.109387158802297641899210590325805,
 0.123491976262065851077208980929008,
 0.134709217311473325928054001771707,
 0.142775938577060080797094273138717,
 0.147739104901338491374841515972068,
 0.149445554002916905664936468389821,
)
_WG = (
 0.066671344308688137593568809893332,
 0.149451349150580593145776339657697,
 0.219086362515982043995534934228163,
 0.269266719309996355091226921569469,
 0.295524224714752870173892994651338,
)

def _build_rule():
    """
    Expands the half-tables into 21 ascending nodes on [-1, 1] with matching
    Kronrod weights and Gauss weights (zero where a node is Kronrod-only).
    """
    nodes = [-x for x in _XGK[:10]] + [0.0] + list(reversed(_XGK[:10]))
    kronrod = list(_WGK[:10]) + [_WGK[10]] + list(reversed(_WGK[:10]))
    gauss_half = [0.0] * 10
    for (i, weight) in enumerate(_WG):
        gauss_half[2 * i + 1] = weight
    gauss = gauss_half + [0.0] + list(reversed(gauss_half))
    return (np.array(nodes), np.array(kronrod), np.array(gauss))

(_NODES, _KRONROD_WEIGHTS, _GAUSS_WEIGHTS) = _build_rule()
_RULE_EVALUATIONS = len(_NODES)


#Functions
###############################################################################
def _truncation_point(a, decay, tol, rel_tol):
    """
    Chooses the finite upper limit beyond which the tail of a semi-infinite
    integrand contributes less than a tenth of the absolute tolerance and of
    the relative floor.
    """
    absolute = math.log(10.0 / tol)
    relative = math.log(10.0 / rel_tol) if rel_tol > 0 else absolute
    lower = max(a, 0.0)
    if decay == DECAY_GAUSSIAN:
        upper = max(math.sqrt(2.0 * absolute), math.sqrt(lower * lower + 2.0 * relative))
    else:
        upper = max(absolute, lower + relative)
    return upper + _TAIL_SAFETY_MARGIN

def _vectorize(spec):
    if spec.vectorized:
        f = spec.f
        return lambda x: np.asarray(f(x), dtype=float)
    f = spec.f
    return lambda x: np.array([f(float(v)) for v in x], dtype=float)

def _prepare(spec, tol, rel_tol):
    """
    Reduces `spec` to a smooth integrand over a finite interval, returning
    (function, lower, upper).

    A single hinted endpoint is removed with x = a + u^2 (or x = b - u^2); both
    endpoints together with x = c + h sin(theta), which maps the arcsine weight
    1/sqrt((x - a)(b - x)) onto d(theta).
    """
    f = _vectorize(spec)
    a = spec.a
    if spec.domain == DOMAIN_SEMI_INFINITE:
        b = _truncation_point(a, spec.decay, tol, rel_tol)
    else:
        b = spec.b
    inside_a = np.nextafter(a, b)
    inside_b = np.nextafter(b, a)

    left = HINT_LEFT_INVERSE_SQRT in spec.hints
    right = HINT_RIGHT_INVERSE_SQRT in spec.hints and spec.domain == DOMAIN_FINITE
    if left and right:
        centre = 0.5 * (a + b)
        half = 0.5 * (b - a)
        def mapped(theta):
            x = np.clip(centre + half * np.sin(theta), inside_a, inside_b)
            return f(x) * (half * np.cos(theta))
        return (mapped, -0.5 * math.pi, 0.5 * math.pi)
    elif left:
        def mapped(u):
            x = np.clip(a + u * u, inside_a, inside_b)
            return f(x) * (2.0 * u)
        return (mapped, 0.0, math.sqrt(b - a))
    elif right:
        def mapped(u):
            x = np.clip(b - u * u, inside_a, inside_b)
            return f(x) * (2.0 * u)
        return (mapped, 0.0, math.sqrt(b - a))
    return (f, a, b)

def _apply_rule(f, lo, hi):
    """
    Applies the Gauss-Kronrod pair to [`lo`, `hi`], returning the Kronrod
    estimate and the magnitude of its difference from the embedded Gauss rule.
    """
    centre = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    abscissae = centre + half * _NODES
    values = f(abscissae)
    if not np.all(np.isfinite(values)):
        index = int(np.argmin(np.isfinite(values)))
        raise NonFiniteEvaluation("Integrand returned %(value)r at abscissa %(x)r" % {
         'value': float(values[index]),
         'x': float(abscissae[index]),
        }, {'abscissa': float(abscissae[index]), 'value': float(values[index])})
    kronrod = half * float(np.dot(_KRONROD_WEIGHTS, values))
    gauss = half * float(np.dot(_GAUSS_WEIGHTS, values))
    return (kronrod, abs(kronrod - gauss))

def _is_indivisible(lo, hi):
    scale = max(abs(lo), abs(hi), 1e-300)
    return (hi - lo) <= 8.0 * MACHINE_EPSILON * scale

def integrate(spec, tol=DEFAULT_TOLERANCE, rel_tol=DEFAULT_RELATIVE_TOLERANCE,
              budget=DEFAULT_EVALUATION_BUDGET, raise_on_failure=True, logger=None):
    """
    Integrates the problem described by the `IntegrandSpec`, `spec`, returning a
    `QuadratureResult`.

    The requested tolerance is max(`tol`, `rel_tol` * |value|); the interval with
    the largest error estimate is bisected until the summed estimates meet it or
    `budget` integrand evaluations have been spent.

    `NotConverged`, carrying the best result, is raised when the budget runs
    out, unless `raise_on_failure` is `False`, in which case the result is
    returned with `converged` unset and a warning is emitted through `logger`.

    `NonFiniteEvaluation` is raised if the integrand yields inf or nan.
    """
    if not isinstance(spec, IntegrandSpec):
        raise InvalidIntegrand("Expected an IntegrandSpec; received %(type)s" % {
         'type': type(spec).__name__,
        })
    if not tol >= MINIMUM_TOLERANCE:
        raise InvalidIntegrand("Tolerance %(tol)r is below the supported minimum of %(minimum)r" % {
         'tol': tol,
         'minimum': MINIMUM_TOLERANCE,
        }, {'tol': tol})
    if rel_tol < 0:
        raise InvalidIntegrand("Relative tolerance must be non-negative")
    if budget < _RULE_EVALUATIONS:
        raise InvalidIntegrand("An evaluation budget of %(budget)r cannot apply a single rule" % {
         'budget': budget,
        })

    (f, lo, hi) = _prepare(spec, tol, rel_tol)
    (value, error) = _apply_rule(f, lo, hi)
    evaluations = _RULE_EVALUATIONS

    sequence = 0 #Breaks ties between equal error estimates deterministically
    pending = [(-error, sequence, lo, hi, value, error)]
    settled = [] #Intervals too narrow to bisect further
    total_value = value
    total_error = error
    while True:
        if total_error <= max(tol, rel_tol * abs(total_value)):
            #Running sums drift; confirm against exact sums before accepting
            (total_value, total_error) = _summarise(pending, settled)
            if total_error <= max(tol, rel_tol * abs(total_value)):
                break
        if not pending or evaluations + 2 * _RULE_EVALUATIONS > budget:
            break

        (_, _, lo, hi, value, error) = heapq.heappop(pending)
        if _is_indivisible(lo, hi):
            settled.append((lo, hi, value, error))
            continue

        middle = 0.5 * (lo + hi)
        (left_value, left_error) = _apply_rule(f, lo, middle)
        (right_value, right_error) = _apply_rule(f, middle, hi)
        evaluations += 2 * _RULE_EVALUATIONS
        sequence += 1
        heapq.heappush(pending, (-left_error, sequence, lo, middle, left_value, left_error))
        sequence += 1
        heapq.heappush(pending, (-right_error, sequence, middle, hi, right_value, right_error))
        total_value += left_value + right_value - value
        total_error += left_error + right_error - error

    (total_value, total_error) = _summarise(pending, settled)
    converged = total_error <= max(tol, rel_tol * abs(total_value))
    result = QuadratureResult(total_value, total_error, evaluations, converged)
    emit_debug(logger, "Integrated %(spec)r: value=%(value)r, error=%(error).3e, evaluations=%(evaluations)i, converged=%(converged)s", {
     'spec': spec,
     'value': total_value,
     'error': total_error,
     'evaluations': evaluations,
     'converged': converged,
    })
    if not converged:
        message = "Integration of %(spec)r did not converge: error estimate %(error).3e exceeds %(target).3e after %(evaluations)i evaluations" % {
         'spec': spec,
         'error': total_error,
         'target': max(tol, rel_tol * abs(total_value)),
         'evaluations': evaluations,
        }
        if raise_on_failure:
            raise NotConverged(message, result, {
             'value': total_value,
             'abs_error_estimate': total_error,
             'evaluations': evaluations,
            })
        emit_warning(logger, message)
    return result

def _summarise(pending, settled):
    """
    Sums values and error estimates over every interval in left-to-right
    order, exactly, so the totals do not depend on heap layout.
    """
    intervals = sorted([(lo, hi, value, error) for (_, _, lo, hi, value, error) in pending] + settled)
    return (
     math.fsum(value for (_, _, value, _) in intervals),
     math.fsum(error for (_, _, _, error) in intervals),
    )
