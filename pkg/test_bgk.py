"""
Disc Zero-Sum Test Suite

Weighted zero sums, sampled growth envelopes, Blaschke families and the
envelope of the perturbation determinant pulled back to the disc.
"""

import cmath
import math

import pytest

from src.bgk.zeros import (
    GrowthEnvelope,
    bgk_sum,
    blaschke_family_ratios,
    blaschke_product,
    end_to_end_envelope,
    envelope_check,
    envelope_estimate,
    lt_envelope,
)
from src.operators.discretize import find_omega
from src.operators.grid import Grid
from src.operators.potentials import gaussian
from src.tools.bgk_tool import RATIO_CEILING
from src.utils.errors import DomainError, NormalizationError


class TestZeroSum:
    def test_examples(self):
        """
        This test verifies the weighted zero sum on hand-computable inputs.

        Expected result: 0.1^{1.5} for one zero at 0.9, 0 for no zeros, 0.125 with a weighted boundary point.
        """
        assert bgk_sum([0.9], 0.0, 0.5) == pytest.approx(0.1 ** 1.5, rel=1e-12)
        assert bgk_sum([0.9], 0.0, 0.5) == pytest.approx(0.031623, abs=1e-6)
        assert bgk_sum([], 0.0, 0.5) == 0.0
        assert bgk_sum([0.5], 0.0, 0.5, boundary=[(1.0, 2.0)]) == pytest.approx(0.125, rel=1e-12)

    def test_zero_outside_disc(self):
        with pytest.raises(DomainError):
            bgk_sum([1.0], 0.0, 0.5)
        with pytest.raises(DomainError):
            bgk_sum([0.5], 0.0, 1.0)

    def test_monotone_in_tau(self):
        zeros = [0.3, 0.6j, -0.9 + 0.1j, 0.2 - 0.7j]
        values = [bgk_sum(zeros, 1.0, tau, boundary=[(1.0, 0.5)]) for tau in (0.1, 0.3, 0.5, 0.7, 0.9)]
        assert all(b <= a for a, b in zip(values, values[1:]))


class TestEnvelopeEstimate:
    def test_constant_function(self):
        assert envelope_estimate(lambda z: 1.0, 1.0) == 0.0

    def test_boundary_singularity(self):
        """
        This test verifies the sampled envelope of exp(1/(1-z) - 1) with alpha = 1.

        Expected result: K_est between 0.9 and 1.
        """
        k_est = envelope_estimate(lambda z: cmath.exp(1.0 / (1.0 - z) - 1.0), 1.0, boundary=[(1.0, 0.0)])
        assert 0.9 <= k_est <= 1.0

    def test_blaschke_factor(self):
        k_est = envelope_estimate(blaschke_product([0.9]), 0.0)
        assert 0.0 < k_est <= math.log(1.0 / 0.9) + 1e-12

    def test_normalization(self):
        with pytest.raises(NormalizationError):
            envelope_estimate(lambda z: cmath.exp(1.0 / (1.0 - z)), 1.0)

    def test_blaschke_normalized(self):
        h = blaschke_product([0.5, 0.3j, -0.7 + 0.2j])
        assert h(0.0) == pytest.approx(1.0, abs=1e-14)
        assert abs(h(0.3j)) == pytest.approx(0.0, abs=1e-14)
        with pytest.raises(DomainError):
            blaschke_product([0.0])


class TestGrowthEnvelope:
    def test_validation(self):
        with pytest.raises(DomainError):
            GrowthEnvelope(1.0, 1.0, ((0.5 + 0.0j, 1.0),))
        with pytest.raises(DomainError):
            GrowthEnvelope(1.0, 1.0, ((1.0 + 0.0j, -1.0),))
        with pytest.raises(DomainError):
            GrowthEnvelope(-1.0, 1.0)

    def test_check(self):
        envelope = GrowthEnvelope(1.0, 1.0, ((1.0 + 0.0j, 0.0),))
        points = [0.5, 0.9j, -0.99]
        result = envelope_check(lambda z: cmath.exp(1.0 / (1.0 - z) - 1.0), envelope, points)
        assert result["holds"] and result["points"] == 3
        result = envelope_check(lambda z: cmath.exp(10.0 / (1.0 - z)), envelope, points)
        assert not result["holds"]


class TestLtEnvelope:
    def test_low_order_exponents(self):
        """
        This test verifies the envelope exponents for d = 1, s = 1/2, p = 2.

        Expected result: alpha = 1 with beta = 1 at both +1 and -1.
        """
        envelope = lt_envelope(1, 0.5, 2.0, a=2.0, omega=1.0, c_omega=1.0, v_norm_p=1.0)
        assert envelope.alpha == pytest.approx(1.0)
        assert [beta for _, beta in envelope.boundary] == pytest.approx([1.0, 1.0])
        assert envelope.k > 0.0

    def test_high_order_exponents(self):
        """
        This test verifies the envelope exponents for d = 1, s = 1, p = 2.

        Expected result: alpha = 3/2, beta clamped to 0 at +1 and 3/2 at -1.
        """
        envelope = lt_envelope(1, 1.0, 2.0, a=2.0, omega=1.0, c_omega=1.0, v_norm_p=1.0)
        assert envelope.alpha == pytest.approx(1.5)
        assert [beta for _, beta in envelope.boundary] == pytest.approx([0.0, 1.5])

    def test_scaling_in_potential(self):
        small = lt_envelope(1, 0.5, 2.0, 2.0, 1.0, 1.0, 1.0)
        large = lt_envelope(1, 0.5, 2.0, 2.0, 1.0, 1.0, 3.0)
        assert large.k == pytest.approx(9.0 * small.k, rel=1e-12)

    def test_shift_below_omega(self):
        with pytest.raises(DomainError):
            lt_envelope(1, 0.5, 2.0, a=1.0, omega=1.0, c_omega=1.0, v_norm_p=1.0)

    def test_end_to_end(self):
        """
        This test verifies the envelope inequality for f o phi_a on a discretized operator.

        Expected result: no violation on the zeros of g and the sample circles.
        """
        grid = Grid(1, 16, 20.0)
        v = gaussian(grid, -0.4 + 0.2j, 1.0)
        result = end_to_end_envelope(grid, 0.5, 2.0, v, find_omega(grid, 0.5, 2.0, v))
        assert result["holds"], result
        assert result["points"] == result["zeros"] + 3 * 16


class TestBlaschkeFamily:
    def test_ratios_bounded(self):
        """
        This test verifies that zero sums stay within a family-wide multiple of K_est.

        Expected result: the largest ratio over 16 Blaschke products is below the ceiling.
        """
        report = blaschke_family_ratios(angles=64)
        assert len(report.rows) == 16
        assert 0.0 < report.max_ratio <= RATIO_CEILING
        assert report.to_dict()["max_ratio"] == report.max_ratio

    def test_seeded(self):
        first = blaschke_family_ratios(moduli=(0.9,), counts=(5,), seed=4, angles=32).to_dict()
        second = blaschke_family_ratios(moduli=(0.9,), counts=(5,), seed=4, angles=32).to_dict()
        assert first == second
