"""
Tests for hypercubix.model.khintchine: the Y * U sampler, its reproducibility
and the statistics that compare samples with the closed forms.
"""
import math

import numpy as np
import pytest
from scipy import special

from hypercubix.model import (
 sample_chi3, sample_joint, sample_radii,
 empirical_maxnorm_cdf, ks_statistic, ks_critical_value,
 maxnorm_cdf, closed_form_density2,
 GENERATOR_ID, ROWS_PER_BLOCK,
 InvalidArgument, InvalidDimension,
)
from hypercubix.model.khintchine import block_generator, open_uniforms


class TestChi3:
    """Y = |(Z1, Z2, Z3)|_2."""

    def test_deterministic_first_draw(self):
        first = sample_chi3(np.random.Generator(np.random.Philox(42)))
        again = sample_chi3(np.random.Generator(np.random.Philox(42)))
        assert first == again
        assert first > 0.0

    def test_moments(self):
        draws = sample_chi3(block_generator(42, 0), size=1000000)
        n = len(draws)
        assert np.all(draws > 0.0)
        assert abs(np.mean(draws ** 2) - 3.0) <= 4.0 * math.sqrt(6.0 / n)
        mean = 2.0 * math.sqrt(2.0 / math.pi)
        assert mean == pytest.approx(1.5957691216, abs=1e-10)
        assert abs(np.mean(draws) - mean) <= 4.0 * math.sqrt((3.0 - mean * mean) / n)

    def test_open_uniforms(self):
        u = open_uniforms(block_generator(5, 0), (1000, 4))
        assert u.shape == (1000, 4)
        assert np.all(u > 0.0) and np.all(u < 1.0)


class TestSampleJoint:
    """Rows of a shared radius times independent signed uniforms."""

    def test_reproducible(self):
        first = sample_joint(2, 5, 7)
        second = sample_joint(2, 5, 7)
        np.testing.assert_array_equal(first.data, second.data)
        assert first.generator_id == GENERATOR_ID
        assert (first.n, first.p, first.seed) == (5, 2, 7)
        assert first.data.shape == (5, 2)

    def test_prefix_of_larger_batch(self):
        large = sample_joint(3, ROWS_PER_BLOCK + 500, 3)
        small = sample_joint(3, 100, 3)
        np.testing.assert_array_equal(large.data[:100], small.data)

    def test_workers_do_not_change_output(self):
        n = 3 * ROWS_PER_BLOCK + 17
        np.testing.assert_array_equal(sample_joint(3, n, 11, workers=4).data, sample_joint(3, n, 11).data)

    def test_seeds_differ(self):
        assert not np.array_equal(sample_joint(2, 10, 1).data, sample_joint(2, 10, 2).data)

    def test_rows_bounded_by_radius(self):
        batch = sample_joint(4, 5000, 9)
        radii = sample_radii(4, 5000, 9)
        assert np.all(radii > 0.0)
        assert np.all(np.max(np.abs(batch.data), axis=1) <= radii)

    def test_marginals_are_normal(self):
        n = 200000
        batch = sample_joint(2, n, 1)
        critical = ks_critical_value(n, 0.01)
        assert critical == pytest.approx(0.003645, abs=1e-6)
        for column in range(2):
            assert ks_statistic(batch.data[:, column]) <= critical

    def test_univariate_moments(self):
        n = 100000
        column = sample_joint(1, n, 2).data[:, 0]
        assert abs(np.mean(column)) <= 4.0 / math.sqrt(n)
        assert abs(np.var(column) - 1.0) <= 4.0 * math.sqrt(2.0 / n)

    def test_dependence_structure(self):
        n = 100000
        data = sample_joint(2, n, 4).data
        magnitude = np.corrcoef(np.abs(data[:, 0]), np.abs(data[:, 1]))[0, 1]
        plain = np.corrcoef(data[:, 0], data[:, 1])[0, 1]
        assert magnitude > 0.2
        assert abs(plain) <= 4.0 / math.sqrt(n)

    def test_preconditions(self):
        with pytest.raises(InvalidArgument):
            sample_joint(1, 0, 1)
        with pytest.raises(InvalidArgument):
            sample_joint(2, 10, -1)
        with pytest.raises(InvalidArgument):
            sample_joint(2, 10, 1 << 64)
        with pytest.raises(InvalidDimension):
            sample_joint(0, 10, 1)

    def test_bivariate_histogram(self):
        """Counts on a 40 x 40 lattice over [-3, 3]^2 match the closed-form density."""
        n = 1000000
        batch = sample_joint(2, n, 2024)
        edges = np.linspace(-3.0, 3.0, 41)
        (observed, _, _) = np.histogram2d(batch.data[:, 0], batch.data[:, 1], bins=(edges, edges))

        (nodes, weights) = np.polynomial.legendre.leggauss(16)
        half = 0.5 * np.diff(edges)
        points = 0.5 * (edges[:-1] + edges[1:])[:, None] + half[:, None] * nodes[None, :]
        w = half[:, None] * weights[None, :]
        norms = np.maximum(np.abs(points)[:, :, None, None], np.abs(points)[None, None, :, :])
        density = 0.5 * special.ndtr(-norms)
        assert density[3, 5, 17, 2] == pytest.approx(closed_form_density2((points[3, 5], points[17, 2])), rel=1e-14)
        expected = n * np.einsum('ia,jb,iajb->ij', w, w, density)
        assert expected.sum() == pytest.approx(n * maxnorm_cdf(2, 3.0), rel=1e-4)

        z = (observed - expected) / np.sqrt(expected)
        assert np.max(np.abs(z)) <= 5.0
        assert np.mean(np.abs(z)) <= 1.5


class TestMaxNormEmpirical:
    """The empirical distribution of |X|_inf."""

    def test_limits(self):
        batch = sample_joint(2, 1000, 5)
        assert empirical_maxnorm_cdf(batch, 100.0) == 1.0
        assert empirical_maxnorm_cdf(batch, 0.0) == 0.0
        with pytest.raises(InvalidArgument):
            empirical_maxnorm_cdf(batch, -1.0)

    def test_monotone(self):
        batch = sample_joint(3, 2000, 6)
        values = [empirical_maxnorm_cdf(batch, a) for a in (0.1, 0.5, 1.0, 2.0, 4.0)]
        assert all(b >= a for (a, b) in zip(values, values[1:]))

    def test_matches_shell_measure(self):
        n = 200000
        batch = sample_joint(2, n, 1)
        q = maxnorm_cdf(2, 1.0)
        assert abs(empirical_maxnorm_cdf(batch, 1.0) - q) <= 4.0 * math.sqrt(q * (1.0 - q) / n)


class TestKolmogorovSmirnov:
    """Distance between an empirical distribution and Phi."""

    def test_perfect_sample(self):
        n = 1000
        column = special.ndtri((np.arange(1, n + 1) - 0.5) / n)
        assert ks_statistic(column) <= 1.0 / n

    def test_rejects_uniform(self):
        column = np.random.Generator(np.random.Philox(3)).uniform(-1.0, 1.0, 100000)
        assert ks_statistic(column) >= 0.1

    def test_empty(self):
        with pytest.raises(InvalidArgument):
            ks_statistic([])

    def test_critical_values(self):
        assert ks_critical_value(10000, 0.05) == pytest.approx(0.0136)
        with pytest.raises(InvalidArgument):
            ks_critical_value(100, 0.2)
