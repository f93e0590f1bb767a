"""
Numerics Test Suite

Closed-form Beta integrals, the semi-infinite quadrature oracle, sphere areas
and the elementary power inequalities.
"""

import math

import numpy as np
import pytest

from src.numerics.integrals import (
    cross_check_algebraic,
    cross_check_rational,
    gaussian_moment_check,
    integral_algebraic,
    integral_rational,
    displayed_sphere_constant,
    power_sum_bounds,
    quad_interval,
    quad_semiinfinite,
    sphere_area,
)
from src.utils.errors import ConvergenceError, DomainError


class TestSphereArea:
    def test_known_values(self):
        """
        This test verifies the unit-sphere measures in low dimension.

        Expected result: 2, 2 pi and 4 pi for d = 1, 2, 3.
        """
        assert sphere_area(1) == 2.0
        assert sphere_area(2) == pytest.approx(2.0 * math.pi, rel=1e-14)
        assert sphere_area(3) == pytest.approx(4.0 * math.pi, rel=1e-14)

    def test_rejects_nonpositive_dimension(self):
        with pytest.raises(DomainError):
            sphere_area(0)

    def test_displayed_constant_differs_in_two_dimensions(self):
        """
        This test verifies that the displayed v_{d-1} formula is kept apart from the true area.

        Expected result: 2 for d = 2, while the circumference is 2 pi.
        """
        assert displayed_sphere_constant(1) == 2.0
        assert displayed_sphere_constant(2) == pytest.approx(2.0, rel=1e-14)
        assert displayed_sphere_constant(2) != pytest.approx(sphere_area(2))

    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_gaussian_moment(self, d):
        """
        This test verifies sphere_area(d) * int r^{d-1} e^{-r^2} dr = pi^{d/2}.

        Expected result: relative gap below 1e-10.
        """
        assert gaussian_moment_check(d) <= 1e-10


class TestClosedForms:
    def test_algebraic_examples(self):
        """
        This test verifies the algebraic Beta integral on hand-computable cases.

        Expected result: pi/2 for (0, 2), 1 for (1, 3).
        """
        assert integral_algebraic(0.0, 2.0) == pytest.approx(math.pi / 2.0, rel=1e-12)
        assert integral_algebraic(1.0, 3.0) == pytest.approx(1.0, rel=1e-12)

    def test_algebraic_divergent(self):
        with pytest.raises(DomainError, match="p > delta\\+1"):
            integral_algebraic(0.0, 1.0)
        with pytest.raises(DomainError):
            integral_algebraic(-1.0, 3.0)

    def test_rational_examples(self):
        """
        This test verifies the rational Beta integral.

        Expected result: 1/3 for (2, 4), 1 for (0, 2), B(3, 1.1) ~ 0.2793 for (2, 4.1).
        """
        assert integral_rational(2.0, 4.0) == pytest.approx(1.0 / 3.0, rel=1e-12)
        assert integral_rational(0.0, 2.0) == pytest.approx(1.0, rel=1e-12)
        expected = math.gamma(3.0) * math.gamma(1.1) / math.gamma(4.1)
        assert integral_rational(2.0, 4.1) == pytest.approx(expected, rel=1e-12)
        assert integral_rational(2.0, 4.1) == pytest.approx(0.2793, abs=1e-4)

    def test_rational_divergent(self):
        with pytest.raises(DomainError):
            integral_rational(2.0, 3.0)
        with pytest.raises(DomainError):
            integral_rational(-1.0, 3.0)


class TestQuadrature:
    def test_lorentzian(self):
        """
        This test verifies the semi-infinite quadrature on (t^2+1)^{-1}.

        Expected result: pi/2 within 1e-10.
        """
        result = quad_semiinfinite(lambda t: 1.0 / (t * t + 1.0), decay_hint=2.0, tol=1e-10)
        assert abs(result.value - math.pi / 2.0) <= 1e-10

    def test_rational_integrand(self):
        result = quad_semiinfinite(lambda t: t * t / (1.0 + t) ** 4, decay_hint=2.0, tol=1e-10)
        assert abs(result.value - 1.0 / 3.0) <= 1e-10

    def test_slow_decay_uses_weighted_tail(self):
        """
        This test verifies an integrand decaying like t^{-1.1}.

        Expected result: B(3, 0.1)-type closed form reproduced to 1e-8 relative.
        """
        numeric = quad_semiinfinite(lambda t: t ** 2 / (1.0 + t) ** 3.1, decay_hint=1.1).value
        assert numeric == pytest.approx(integral_rational(2.0, 3.1), rel=1e-8)

    def test_divergent_integrand(self):
        """
        This test verifies that a non-decaying integrand is reported, not silently summed.

        Expected result: ConvergenceError carrying a best estimate.
        """
        with pytest.raises(ConvergenceError) as info:
            quad_semiinfinite(lambda t: 1.0, decay_hint=2.0)
        assert info.value.best_estimate is not None

    def test_flagged_interval_is_rejected(self):
        """
        This test verifies that a QUADPACK-flagged result on a finite interval is not accepted.

        Expected result: u^{-2} on (0, 1] raises ConvergenceError with a best estimate.
        """
        with pytest.raises(ConvergenceError) as info:
            quad_interval(lambda u: 1.0 / (u * u) if u > 0.0 else 0.0, 0.0, 1.0)
        assert info.value.best_estimate is not None

    def test_interval_with_breakpoints(self):
        result = quad_interval(lambda x: 1.0 / ((x - 0.5) ** 2 + 1e-6), 0.0, 1.0, points=[0.5])
        exact = 2.0 * math.atan(0.5 / 1e-3) / 1e-3
        assert result.value == pytest.approx(exact, rel=1e-9)

    def test_negative_estimate_is_rejected(self):
        with pytest.raises(ConvergenceError, match="negative"):
            quad_semiinfinite(lambda t: -1.0 / (1.0 + t * t), decay_hint=2.0)

    def test_decay_hint_must_exceed_one(self):
        with pytest.raises(DomainError):
            quad_semiinfinite(lambda t: 1.0 / (1.0 + t * t), decay_hint=1.0)


class TestCrossChecks:
    def test_algebraic_against_quadrature(self):
        """
        This test verifies the algebraic closed form against quadrature on random exponents.

        Expected result: relative gap at most 1e-8 everywhere.
        """
        rng = np.random.default_rng(1)
        for _ in range(200):
            delta = rng.uniform(-0.5, 3.0)
            p = delta + 1.0 + rng.uniform(0.3, 5.0)
            assert cross_check_algebraic(delta, p) <= 1e-8, (delta, p)

    def test_rational_against_quadrature(self):
        rng = np.random.default_rng(2)
        for _ in range(200):
            a = rng.uniform(-0.5, 3.0)
            b = a + 1.0 + rng.uniform(0.3, 5.0)
            assert cross_check_rational(a, b) <= 1e-8, (a, b)


class TestPowerSumBounds:
    @pytest.mark.parametrize(
        "a, b, alpha, expected",
        [
            (1.0, 1.0, 2.0, (2.0, 4.0, 4.0)),
            (1.0, 0.0, 0.5, (2.0 ** -0.5, 1.0, 1.0)),
            (3.0, 4.0, 2.0, (25.0, 49.0, 50.0)),
        ],
    )
    def test_examples(self, a, b, alpha, expected):
        assert power_sum_bounds(a, b, alpha) == pytest.approx(expected, rel=1e-14)

    def test_random_triples(self):
        """
        This test verifies lower <= value <= upper, with equality at the top when a = b and alpha >= 1.

        Expected result: no violations on 10^5 random triples.
        """
        rng = np.random.default_rng(3)
        a = rng.uniform(0.0, 10.0, 100_000)
        b = rng.uniform(0.0, 10.0, 100_000)
        alpha = rng.uniform(0.05, 4.0, 100_000)
        for x, y, t in zip(a[:2000], b[:2000], alpha[:2000]):
            lower, value, upper = power_sum_bounds(x, y, t)
            assert lower <= value * (1 + 1e-12) and value <= upper * (1 + 1e-12)
        base = a ** alpha + b ** alpha
        value = (a + b) ** alpha
        factor = 2.0 ** (alpha - 1.0)
        assert np.all(np.minimum(1.0, factor) * base <= value * (1 + 1e-12))
        assert np.all(value <= np.maximum(1.0, factor) * base * (1 + 1e-12))
        lower, value, upper = power_sum_bounds(2.5, 2.5, 3.0)
        assert value == pytest.approx(upper, rel=1e-14)

    def test_negative_input(self):
        with pytest.raises(DomainError):
            power_sum_bounds(-1.0, 1.0, 2.0)
