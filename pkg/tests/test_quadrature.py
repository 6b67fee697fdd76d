"""
Tests for hypercubix.numerics.quadrature: adaptive Gauss-Kronrod integration
over finite and semi-infinite domains with endpoint-singularity hints.
"""
import math

import numpy as np
import pytest

from hypercubix.numerics import (
 integrate, finite, semi_infinite, IntegrandSpec,
 QuadratureResult,
 DECAY_EXPONENTIAL,
 HINT_LEFT_INVERSE_SQRT, HINT_RIGHT_INVERSE_SQRT,
 InvalidIntegrand, NonFiniteEvaluation, NotConverged,
 std_normal_sf, std_normal_pdf,
)
from hypercubix.numerics.quadrature import MACHINE_EPSILON

BOTH_ENDPOINTS = (HINT_LEFT_INVERSE_SQRT, HINT_RIGHT_INVERSE_SQRT)


class TestFiniteDomains:
    """Integration over [a, b]."""

    def test_constant(self):
        result = integrate(finite(lambda x: np.ones_like(x), 0.0, 1.0))
        assert isinstance(result, QuadratureResult)
        assert result.value == pytest.approx(1.0, abs=1e-15)
        assert result.converged
        assert result.evaluations >= 1

    def test_arcsine_weight(self):
        """The uniform correlation mixture at the origin: 1/4."""
        spec = finite(lambda r: 1.0 / (4.0 * math.pi * np.sqrt((1.0 - r) * (1.0 + r))), -1.0, 1.0, hints=BOTH_ENDPOINTS)
        result = integrate(spec, tol=1e-12)
        assert result.value == pytest.approx(0.25, abs=1e-10)
        assert result.converged

    def test_left_inverse_sqrt(self):
        for tol in (1e-8, 1e-10, 1e-12):
            result = integrate(finite(lambda x: 1.0 / np.sqrt(x), 0.0, 1.0, hints=(HINT_LEFT_INVERSE_SQRT,)), tol=tol)
            assert abs(result.value - 2.0) <= tol

    def test_right_inverse_sqrt(self):
        result = integrate(finite(lambda x: 1.0 / np.sqrt(1.0 - x), 0.0, 1.0, hints=(HINT_RIGHT_INVERSE_SQRT,)), tol=1e-10)
        assert result.value == pytest.approx(2.0, abs=1e-10)

    def test_additivity(self):
        f = lambda x: np.exp(x) * np.cos(3.0 * x)
        whole = integrate(finite(f, 0.0, 1.0), tol=1e-13)
        left = integrate(finite(f, 0.0, 0.37), tol=1e-13)
        right = integrate(finite(f, 0.37, 1.0), tol=1e-13)
        slack = whole.abs_error_estimate + left.abs_error_estimate + right.abs_error_estimate
        assert abs(left.value + right.value - whole.value) <= slack + 4.0 * MACHINE_EPSILON * abs(whole.value)

    def test_scalar_integrand(self):
        result = integrate(finite(lambda x: math.sin(x), 0.0, math.pi, vectorized=False), tol=1e-12)
        assert result.value == pytest.approx(2.0, abs=1e-12)

    def test_deterministic(self):
        spec = finite(lambda x: np.abs(np.sin(7.0 * x)), 0.0, 3.0)
        assert integrate(spec, tol=1e-12) == integrate(spec, tol=1e-12)


class TestSemiInfiniteDomains:
    """Integration over [a, inf) by truncation."""

    def test_half_gaussian(self):
        result = integrate(semi_infinite(lambda y: np.exp(-0.5 * y * y), 0.0), tol=1e-13)
        assert result.value == pytest.approx(1.2533141373155003, abs=1e-12)

    def test_normal_tails(self):
        pdf = lambda y: np.exp(-0.5 * y * y) / math.sqrt(2.0 * math.pi)
        for t in (0.0, 1.0, 3.0, 6.0):
            result = integrate(semi_infinite(pdf, t), tol=1e-14)
            assert abs(result.value - std_normal_sf(t)) <= 1e-13

    def test_exponential_decay(self):
        result = integrate(semi_infinite(lambda u: np.exp(-u), 0.0, decay=DECAY_EXPONENTIAL), tol=1e-13)
        assert result.value == pytest.approx(1.0, abs=1e-12)

    def test_left_hint_on_tail(self):
        """integral of u^(-1/2) exp(-u) over [0, inf) is sqrt(pi)."""
        spec = semi_infinite(lambda u: np.exp(-u) / np.sqrt(u), 0.0, decay=DECAY_EXPONENTIAL, hints=(HINT_LEFT_INVERSE_SQRT,))
        assert integrate(spec, tol=1e-12).value == pytest.approx(math.sqrt(math.pi), abs=1e-11)


class TestFailures:
    """Budget exhaustion, non-finite values and malformed problems."""

    def test_budget_exhaustion_raises(self):
        spec = finite(lambda x: np.sin(1.0 / x), 0.0, 1.0)
        with pytest.raises(NotConverged) as info:
            integrate(spec, budget=63)
        assert not info.value.result.converged
        assert info.value.result.evaluations <= 63

    def test_budget_exhaustion_can_warn(self):
        spec = finite(lambda x: np.sin(1.0 / x), 0.0, 1.0)
        with pytest.warns(UserWarning):
            result = integrate(spec, budget=63, raise_on_failure=False)
        assert not result.converged

    def test_non_finite_integrand(self):
        with pytest.raises(NonFiniteEvaluation):
            integrate(finite(lambda x: np.full_like(x, np.nan), 0.0, 1.0))

    def test_tolerance_floor(self):
        with pytest.raises(InvalidIntegrand):
            integrate(finite(lambda x: x, 0.0, 1.0), tol=1e-16)

    def test_malformed_specs(self):
        with pytest.raises(InvalidIntegrand):
            finite(lambda x: x, 1.0, 1.0)
        with pytest.raises(InvalidIntegrand):
            semi_infinite(lambda x: x, 0.0, hints=(HINT_RIGHT_INVERSE_SQRT,))
        with pytest.raises(InvalidIntegrand):
            finite(lambda x: x, 0.0, 1.0, hints=('log',))
        with pytest.raises(InvalidIntegrand):
            integrate(std_normal_pdf)

    def test_invalid_integrand_is_value_error(self):
        with pytest.raises(ValueError):
            IntegrandSpec(lambda x: x, 0.0, None)
