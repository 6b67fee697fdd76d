"""
Tests for hypercubix.model.density and the value types in model_core.
"""
import math

import numpy as np
import pytest
from scipy import special

from hypercubix.numerics import (
 integrate, finite,
 std_normal_pdf, std_normal_cdf, std_normal_cdf_array,
 INV_SQRT_2PI,
)
from hypercubix.model import (
 Point, Correlation, INFINITE_AT_ORIGIN,
 as_point,
 conditional_density, closed_form_density2,
 density_p, density_profile,
 exponent_g, exponent_g_values, exponent_g_derivative, exponent_argmin, exponent_minimum,
 marginalize_last, maxnorm_cdf,
 InvalidPoint, InvalidDimension, InvalidCorrelation, SingularCorrelation,
 UndefinedArgmin, InvalidArgument, InvalidTolerance,
)

EXPONENT_POINTS = ((1.0, 0.5), (2.0, 1.0), (-1.0, 3.0), (1.0, -1.0))
EXPONENT_RHOS = [i / 10.0 for i in range(-9, 10)]


class TestValueTypes:
    """Points, correlations and density values."""

    def test_point_caches_max_norm(self):
        point = Point((0.5, -2.0, 1.0))
        assert point.max_norm == 2.0
        assert point.dimension == 3
        assert not point.is_origin
        assert Point((0.0, -0.0)).is_origin

    def test_point_rejects_bad_input(self):
        with pytest.raises(InvalidPoint):
            Point(())
        with pytest.raises(InvalidPoint):
            Point((1.0, math.nan))
        with pytest.raises(InvalidPoint):
            as_point((1.0, 2.0, 3.0), 2)

    def test_correlation_range(self):
        assert Correlation(1.0).singular
        assert not Correlation(0.3).singular
        with pytest.raises(InvalidCorrelation):
            Correlation(1.5)

    def test_infinite_marker(self):
        assert INFINITE_AT_ORIGIN.infinite
        assert math.isinf(float(INFINITE_AT_ORIGIN))


class TestConditionalDensity:
    """The bivariate normal density with unit variances."""

    def test_origin(self):
        assert conditional_density((0.0, 0.0), 0.0) == pytest.approx(0.15915494309189535, rel=1e-15)
        assert conditional_density((0.0, 0.0), 0.6) == pytest.approx(0.19894367886486917, rel=1e-14)

    def test_direct_formula(self):
        (x1, x2, rho) = (1.0, 0.5, 0.3)
        expected = math.exp(-(x1 * x1 + x2 * x2 - 2.0 * rho * x1 * x2) / (2.0 * (1.0 - rho * rho))) / (2.0 * math.pi * math.sqrt(1.0 - rho * rho))
        assert conditional_density((x1, x2), rho) == pytest.approx(expected, rel=1e-14)

    def test_singular(self):
        for rho in (1.0, -1.0):
            with pytest.raises(SingularCorrelation):
                conditional_density((0.5, 0.5), rho)


class TestClosedFormDensity2:
    """f(x) = (1 - Phi(|x|_inf)) / 2."""

    def test_origin(self):
        assert closed_form_density2((0.0, 0.0)) == 0.25

    def test_known_value(self):
        assert closed_form_density2((1.0, 0.5)) == pytest.approx(0.07932762696572855, abs=1e-15)

    def test_depends_on_max_norm(self):
        assert closed_form_density2((-2.0, 2.0)) == closed_form_density2((2.0, -2.0)) == closed_form_density2((2.0, 2.0))

    def test_normalised(self):
        """Iterated quadrature over [-8, 8]^2 gives 1."""
        def inner(x1):
            return integrate(finite(lambda x2: 0.5 * std_normal_cdf_array(-np.maximum(abs(x1), np.abs(x2))), 0.0, 8.0), tol=1e-12).value
        total = 4.0 * integrate(finite(inner, 0.0, 8.0, vectorized=False), tol=1e-11).value
        assert total == pytest.approx(1.0, abs=1e-6)


class TestDensityP:
    """The density in general dimension."""

    def test_first_dimension_is_normal(self):
        assert density_p((0.0,)).value == pytest.approx(0.3989422804014327, rel=1e-15)
        assert density_p((1.3,)).value == pytest.approx(std_normal_pdf(1.3), abs=1e-12)

    def test_second_dimension_matches_closed_form(self):
        assert density_p((0.0, 0.0)).value == 0.25
        for x in ((1.0, 0.5), (-2.5, 0.1), (0.3, -3.0)):
            assert density_p(x).value == pytest.approx(closed_form_density2(x), abs=1e-12)

    def test_infinite_at_origin(self):
        for p in (3, 4, 5):
            assert density_p((0.0,) * p) == INFINITE_AT_ORIGIN
        for p in (1, 2):
            assert not density_p((0.0,) * p).infinite

    def test_third_dimension_matches_exponential_integral(self):
        expected = 0.25 / math.sqrt(2.0 * math.pi) * 0.5 * special.exp1(0.5)
        assert density_p((1.0, 0.0, 0.0)).value == pytest.approx(expected, rel=1e-11)

    def test_contours_are_hypercubes(self):
        assert density_p((0.3, -1.2, 0.5)) == density_p((1.2, 0.0, 0.0)) == density_p((0.0, 0.0, -1.2))

    def test_decays_along_contours(self):
        for p in (2, 3, 4):
            values = [density_profile(p, m).value for m in (0.1, 0.5, 1.0, 2.0, 3.5)]
            assert all(a > b for (a, b) in zip(values, values[1:])), p

    def test_tiny_norms_stay_finite(self):
        t = 1e-170
        value = density_p((t, 0.0, 0.0))
        assert not value.infinite
        expected = 0.25 * INV_SQRT_2PI * 0.5 * (-np.euler_gamma + math.log(2.0) - 2.0 * math.log(t))
        assert value.value == pytest.approx(expected, rel=1e-12)

        value = density_p((1e-150, 0.0, 0.0, 0.0, 0.0))
        assert not value.infinite
        assert value.value == pytest.approx(2.0 ** -4 * INV_SQRT_2PI * 0.5e300, rel=1e-12)

    def test_beyond_float_range_is_not_the_origin(self):
        value = density_p((1e-160, 0.0, 0.0, 0.0, 0.0))
        assert value.value == math.inf
        assert not value.infinite
        assert value != INFINITE_AT_ORIGIN

    def test_invalid_dimension(self):
        with pytest.raises(InvalidDimension):
            density_profile(0, 1.0)


class TestExponentProfile:
    """g(rho), its derivative, minimiser and minimum."""

    def test_values(self):
        assert exponent_g((1.0, 1.0), 0.0) == 1.0
        (x1, x2, rho) = (2.0, 1.0, 0.25)
        expected = (x1 * x1 + x2 * x2 - 2.0 * rho * x1 * x2) / (2.0 * (1.0 - rho * rho))
        assert exponent_g((x1, x2), rho) == pytest.approx(expected, rel=1e-15)
        assert exponent_g((0.0, 0.0), 0.7) == 0.0

    def test_completed_square_near_unit_correlation(self):
        """Equal magnitudes approach x^2 / 2 at the matching boundary without cancellation."""
        for x in (20.0, 40.0, 1e3):
            for gap in (1e-6, 1e-12, 1e-15):
                rho = 1.0 - gap
                gap = 1.0 - rho
                one_minus_square = gap * (2.0 - gap)
                expected = 0.5 * x * x * (1.0 + gap / (2.0 - gap))
                assert exponent_g_values((x, x), rho, one_minus_square) == pytest.approx(expected, rel=1e-12), (x, gap)
                assert exponent_g_values((x, -x), -rho, one_minus_square) == pytest.approx(expected, rel=1e-12), (x, gap)
                assert exponent_g_values((-x, -x), rho, one_minus_square) == pytest.approx(expected, rel=1e-12), (x, gap)

    def test_completed_square_is_symmetric(self):
        for x in EXPONENT_POINTS + ((3.0, -3.0), (2.5, 2.5)):
            for rho in EXPONENT_RHOS:
                q = (1.0 - rho) * (1.0 + rho)
                value = exponent_g_values(x, rho, q)
                assert exponent_g_values((x[1], x[0]), rho, q) == value, (x, rho)
                assert exponent_g_values((-x[0], -x[1]), rho, q) == value, (x, rho)
                assert exponent_g_values((x[0], -x[1]), -rho, q) == value, (x, rho)

    def test_derivative_anchors(self):
        assert exponent_g_derivative((1.0, 1.0), 0.0) == -1.0
        assert exponent_g_derivative((2.0, 1.0), 0.5) == 0.0
        assert exponent_g_derivative((2.0, 1.0), 0.2) < 0.0
        assert exponent_g_derivative((2.0, 1.0), 0.8) > 0.0

    def test_derivative_matches_finite_differences(self):
        h = 1e-6
        for x in EXPONENT_POINTS:
            for rho in EXPONENT_RHOS:
                numerical = (exponent_g(x, rho + h) - exponent_g(x, rho - h)) / (2.0 * h)
                analytic = exponent_g_derivative(x, rho)
                assert abs(numerical - analytic) <= 1e-6 * max(1.0, abs(analytic)), (x, rho)

    def test_convex(self):
        h = 1e-4
        for x in EXPONENT_POINTS:
            for rho in EXPONENT_RHOS:
                second = (exponent_g(x, rho + h) - 2.0 * exponent_g(x, rho) + exponent_g(x, rho - h)) / (h * h)
                assert second >= -1e-8, (x, rho)

    def test_argmin(self):
        assert exponent_argmin((-0.5, 2.0)) == -0.25
        assert exponent_argmin((3.0, 3.0)) == 1.0
        assert exponent_argmin((3.0, -3.0)) == -1.0
        assert exponent_argmin((2.0, 0.0)) == 0.0
        assert exponent_argmin((2.0, 1.0)) == 0.5

    def test_argmin_undefined_at_origin(self):
        with pytest.raises(UndefinedArgmin):
            exponent_argmin((0.0, 0.0))

    def test_minimum(self):
        for x in ((2.0, 1.0), (-0.5, 2.0), (1.0, -3.0), (2.0, 0.0), (0.2, 0.7)):
            expected = 0.5 * max(x[0] * x[0], x[1] * x[1])
            assert exponent_g(x, exponent_argmin(x)) == pytest.approx(expected, abs=1e-12)
            assert exponent_minimum(x) == expected

    def test_monotone_about_minimiser(self):
        x = (2.0, 1.0)
        a = exponent_argmin(x)
        below = [exponent_g(x, r) for r in np.linspace(-0.99, a, 50)]
        above = [exponent_g(x, r) for r in np.linspace(a, 0.99, 50)]
        assert all(q <= p + 1e-12 for (p, q) in zip(below, below[1:]))
        assert all(q >= p - 1e-12 for (p, q) in zip(above, above[1:]))


class TestMarginalization:
    """Integrating out the last coordinate reproduces the lower dimension."""

    def test_bivariate_marginal_is_normal(self):
        assert marginalize_last(2, (1.0,)) == pytest.approx(0.24197072451914337, abs=1e-9)
        for x1 in (0.0, 0.5, 2.0, 3.0):
            assert marginalize_last(2, (x1,)) == pytest.approx(std_normal_pdf(x1), abs=1e-8)

    def test_third_dimension_at_origin(self):
        assert marginalize_last(3, (0.0, 0.0)) == pytest.approx(0.25, abs=1e-9)

    def test_fourth_dimension(self):
        prefix = (1.0, 0.5, 0.2)
        assert marginalize_last(4, prefix) == pytest.approx(density_p(prefix).value, abs=1e-8)

    def test_consistency_grid(self):
        for p in (3, 4):
            for m in (0.25, 1.0, 2.5):
                prefix = (m, -0.5 * m, m / 3.0)[:p - 1]
                assert marginalize_last(p, prefix) == pytest.approx(density_p(prefix).value, abs=1e-6)

    def test_infinite_for_high_dimensions_at_origin(self):
        assert math.isinf(marginalize_last(4, (0.0, 0.0, 0.0)))

    def test_preconditions(self):
        with pytest.raises(InvalidDimension):
            marginalize_last(1, ())
        with pytest.raises(InvalidTolerance):
            marginalize_last(2, (1.0,), tol=1e-13)
        with pytest.raises(InvalidPoint):
            marginalize_last(3, (1.0,))


class TestMaxNormDistribution:
    """P(|X|_inf <= a) from the shell measure of the hypercube."""

    def test_univariate(self):
        assert maxnorm_cdf(1, 1.0) == pytest.approx(2.0 * std_normal_cdf(1.0) - 1.0, abs=1e-9)

    def test_total_mass(self):
        for p in (1, 2, 3):
            assert maxnorm_cdf(p, math.inf) == pytest.approx(1.0, abs=1e-8), p

    def test_bounds(self):
        assert maxnorm_cdf(2, 0.0) == 0.0
        assert 0.0 < maxnorm_cdf(2, 0.5) < maxnorm_cdf(2, 1.0) < 1.0
        with pytest.raises(InvalidArgument):
            maxnorm_cdf(2, -1.0)
