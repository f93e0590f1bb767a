"""
Resolvent Norm Test Suite

Direct L^p norms of (lambda - |xi|^{2s})^{-1}, the two closed-form bounds and
their constant ledger.
"""

import cmath
import math

import pytest

from src.resolvent.bounds import (
    bound_BR,
    bound_BR1,
    bound_negative_axis,
    check_dominance,
    resolvent_constants,
    resolvent_lp_direct,
)
from src.resolvent.suites import dominance_suite
from src.utils.errors import DomainError, WrongRegimeError


class TestDirectNorm:
    @pytest.mark.parametrize(
        "d, s, p, lam, expected",
        [
            (1, 0.5, 2.0, -1.0, 2.0),
            (1, 0.5, 2.0, 1j, math.pi),
            (2, 1.0, 2.0, -1.0, math.pi),
            (1, 1.0, 2.0, -1.0, math.pi / 2.0),
            (1, 1.0, 2.0, 4j, math.pi / (8.0 * math.sqrt(2.0))),
        ],
    )
    def test_closed_forms(self, d, s, p, lam, expected):
        """
        This test verifies the radial quadrature on cases with elementary antiderivatives.

        Expected result: agreement to 1e-8 relative.
        """
        assert resolvent_lp_direct(d, s, p, lam) == pytest.approx(expected, rel=1e-8)

    def test_divergent(self):
        with pytest.raises(DomainError, match="p > d/2s"):
            resolvent_lp_direct(1, 0.5, 1.0, -1.0)

    def test_on_spectrum(self):
        with pytest.raises(DomainError):
            resolvent_lp_direct(1, 0.5, 2.0, 2.0)

    def test_conjugation_symmetry(self):
        lam = 0.7 + 2.3j
        assert resolvent_lp_direct(1, 0.75, 2.5, lam) == pytest.approx(
            resolvent_lp_direct(1, 0.75, 2.5, lam.conjugate()), rel=1e-10
        )


def _half_order_line(lam: complex) -> float:
    # d = 1, s = 1/2, p = 2: 2 int_0^inf dr / ((r - a)^2 + b^2)
    b = abs(lam.imag)
    return 2.0 * (math.pi / 2.0 + math.atan(lam.real / b)) / b


def _first_order_line(lam: complex) -> float:
    # d = 1, s = 1, p = 2: residues at the two roots of r^2 = lambda in the upper half plane
    return math.pi / (2.0 * abs(lam) * abs(cmath.sqrt(lam).imag))


class TestNearRay:
    @pytest.mark.parametrize("lam", [1.0 + 1e-6j, 100.0 + 1e-3j, 0.001 - 1e-9j, 3.0 - 0.2j])
    def test_half_order_close_to_ray(self, lam):
        """
        This test verifies the direct norm when lambda sits just above or below (0, inf).

        Expected result: the arctangent closed form to 1e-7, below bound_BR.
        """
        direct = resolvent_lp_direct(1, 0.5, 2.0, lam)
        assert direct == pytest.approx(_half_order_line(lam), rel=1e-7)
        assert direct < bound_BR(1, 0.5, 2.0, lam)

    @pytest.mark.parametrize("lam", [1.0 + 1e-6j, 5.0 + 1e-4j])
    def test_first_order_close_to_ray(self, lam):
        """
        This test verifies the direct norm for s = 1 near the ray and its symmetry under conjugation.

        Expected result: pi / (2 |lambda| Im sqrt(lambda)) to 1e-7, below bound_BR1.
        """
        direct = resolvent_lp_direct(1, 1.0, 2.0, lam)
        assert direct == pytest.approx(_first_order_line(lam), rel=1e-7)
        assert direct == pytest.approx(resolvent_lp_direct(1, 1.0, 2.0, lam.conjugate()), rel=1e-9)
        assert direct < bound_BR1(1, 1.0, 2.0, lam)

    def test_closed_forms_agree_away_from_ray(self):
        assert _half_order_line(1j) == pytest.approx(math.pi, rel=1e-14)
        assert _first_order_line(4j) == pytest.approx(math.pi / (8.0 * math.sqrt(2.0)), rel=1e-14)


class TestConstants:
    def test_low_order_example(self):
        """
        This test verifies the constants of the regime s <= d/2 for d = 1, s = 1/2, p = 2.

        Expected result: delta = 0, C = 1, C' = 2, K1 = pi, K2 = M1 = 2 pi.
        """
        c = resolvent_constants(1, 0.5, 2.0)
        assert c.delta == 0.0
        assert c.c_ds == 1.0 and c.c_prime_ds == 2.0
        assert c.k1 == pytest.approx(math.pi, rel=1e-12)
        assert c.k2 == pytest.approx(2.0 * math.pi, rel=1e-12)
        assert c.m1 == pytest.approx(2.0 * math.pi, rel=1e-12)
        assert c.n1 is None
        assert c.low_order

    def test_high_order_example(self):
        """
        This test verifies N1 for d = 1, s = 1, p = 2.

        Expected result: N1 = max(pi/sqrt2, 2 + pi) = 2 + pi.
        """
        c = resolvent_constants(1, 1.0, 2.0)
        assert c.delta == pytest.approx(-0.5)
        assert c.j_delta == pytest.approx(math.pi / math.sqrt(2.0), rel=1e-12)
        assert c.n1 == pytest.approx(2.0 + math.pi, rel=1e-12)
        assert c.m1 is None
        assert not c.low_order

    def test_region_violation(self):
        with pytest.raises(DomainError):
            resolvent_constants(1, 0.5, 1.0)

    def test_all_positive(self):
        for d, s, p in [(1, 0.5, 2.0), (2, 0.5, 3.0), (3, 1.0, 2.0), (1, 1.0, 1.5)]:
            c = resolvent_constants(d, s, p)
            named = [c.c_ds, c.c_prime_ds, c.j0, c.j_delta]
            named += [c.k1, c.k2, c.m1] if c.low_order else [c.k3, c.n1]
            assert all(v > 0.0 for v in named), (d, s, p)


class TestClosedFormBounds:
    def test_br_examples(self):
        """
        This test verifies bound_BR at -1 and i for d = 1, s = 1/2, p = 2.

        Expected result: 4 pi at both points, above the direct values 2 and pi.
        """
        assert bound_BR(1, 0.5, 2.0, -1.0) == pytest.approx(4.0 * math.pi, rel=1e-12)
        assert bound_BR(1, 0.5, 2.0, 1j) == pytest.approx(4.0 * math.pi, rel=1e-12)

    def test_br1_examples(self):
        """
        This test verifies bound_BR1 for d = 1, s = 1, p = 2.

        Expected result: 2 + pi at -1 and (2 + pi)/4^{3/2} ~ 0.6427 at 4i.
        """
        assert bound_BR1(1, 1.0, 2.0, -1.0) == pytest.approx(2.0 + math.pi, rel=1e-12)
        assert bound_BR1(1, 1.0, 2.0, 4j) == pytest.approx((2.0 + math.pi) / 8.0, rel=1e-12)
        assert bound_BR1(1, 1.0, 2.0, 4j) == pytest.approx(0.6427, abs=1e-4)

    def test_wrong_regime(self):
        with pytest.raises(WrongRegimeError) as info:
            bound_BR(1, 1.0, 2.0, -1.0)
        assert info.value.use_instead == "bound_BR1"
        with pytest.raises(WrongRegimeError):
            bound_BR1(2, 0.5, 3.0, -1.0)

    def test_boundary_belongs_to_br(self):
        assert bound_BR(2, 1.0, 2.0, -1.0) > 0.0
        with pytest.raises(WrongRegimeError):
            bound_BR1(2, 1.0, 2.0, -1.0)

    def test_negative_axis_refinement(self):
        refined = bound_negative_axis(1, 0.5, 2.0, -1.0)
        assert refined == pytest.approx(math.pi, rel=1e-12)
        assert 2.0 <= refined <= bound_BR(1, 0.5, 2.0, -1.0)

    def test_check_dominance_row(self):
        row = check_dominance(1, 1.0, 2.0, 4j)
        assert row["bound_name"] == "BR1"
        assert row["holds"]
        assert row["direct"] == pytest.approx(math.pi / (8.0 * math.sqrt(2.0)), rel=1e-8)
        assert "negative_axis_bound" not in row


class TestDominanceSuite:
    @pytest.mark.parametrize("d, s, p", [(1, 0.5, 2.0), (1, 1.0, 2.0), (2, 0.75, 2.5)])
    def test_dominance(self, d, s, p):
        """
        This test verifies direct <= bound on quasi-random lambda in all four quadrants.

        Expected result: no violation of dominance, conjugation, negative-axis or monotonicity.
        """
        report = dominance_suite(d, s, p, samples=60, seed=0)
        assert report.passed, report.to_dict()
        assert 0.0 < report.max_ratio < 1.0
