"""Integration over the shift a in [omega, inf).

Every proof case reduces a bound of the form
    sum_lambda w(lambda) (a - omega)^p a^e (a + |lambda|)^{-E} <= const
to one without a via
    int_omega^inf (a - omega)^p a^e (a + |lambda|)^{-E} da >= (|lambda| + omega)^{p+1+e-E} J,
with a = omega + (|lambda| + omega) t and J = int_0^inf t^{p+e} (t+1)^{-E} dt when e >= 0,
J = int_0^inf t^p (t+1)^{-(E-e)} dt when e < 0.
"""

import logging
from typing import NamedTuple

from src.lieb_thirring.exponents import Case, case_dispatch
from src.lieb_thirring.params import SpectralParams, Theorem
from src.numerics.integrals import integral_rational, quad_semiinfinite
from src.utils.config import QUAD_TOL
from src.utils.errors import DomainError

logger = logging.getLogger(__name__)


class ShiftExponents(NamedTuple):
    e: float
    big_e: float


def shift_exponents(case: Case, params: SpectralParams) -> ShiftExponents:
    """(e, E) of the a-dependence in the pre-integration bound of each case."""
    p, tau, h = params.p, params.tau, params.half_ratio
    if case is Case.T1_CASE1:
        return ShiftExponents(-1.0, h + p / 2.0 + 1.5 * tau)
    if case is Case.T1_CASE2:
        return ShiftExponents(-1.0, p + 2.0 * tau)
    if case in (Case.T1_CASE3A, Case.T1_CASE3B):
        return ShiftExponents(0.5 * (p - params.ratio - 2.0 - tau), 1.5 * (p + tau) - h)
    if case in (Case.T1B_REGION1A, Case.T1B_REGION1B):
        return ShiftExponents(0.5 * (p - 3.0 * h - 1.0 - tau), 1.5 * (p + tau) - 1.5 * h + 0.5)
    if case is Case.T1B_REGION2:
        return ShiftExponents(0.5 * (p - 3.0 * h - 1.0 - tau), p + 1.0 - h + tau)
    if case is Case.T1B_REGION3:
        return ShiftExponents(-1.0, 0.5 * (p + 1.0) + 0.5 * h + 1.5 * tau)
    return ShiftExponents(p - h - 1.0 - tau, 2.0 * p)


def proof_integral(case: Case, params: SpectralParams) -> float:
    """J of the integration step for this case."""
    e, big_e = shift_exponents(case, params)
    p = params.p
    if e >= 0.0:
        return integral_rational(p + e, big_e)
    return integral_rational(p, big_e - e)


def a_integration_check(
    theorem,
    params: SpectralParams,
    lam_abs: float,
    omega: float,
    tol: float = QUAD_TOL,
) -> dict:
    """Quadrature of int_omega^inf (a-omega)^p a^e (a+|lambda|)^{-E} da against its closed-form minorant."""
    if not omega >= 1.0:
        raise DomainError(f"omega must satisfy omega >= 1, got omega={omega}")
    if not lam_abs > 0.0:
        raise DomainError(f"|lambda| must be positive, got {lam_abs}")
    case = case_dispatch(theorem, params)
    e, big_e = shift_exponents(case, params)
    p = params.p
    scale = lam_abs + omega

    def integrand(t: float) -> float:
        return t ** p * (omega + scale * t) ** e * (t + 1.0) ** (-big_e)

    numeric = scale ** (p + 1.0 - big_e) * quad_semiinfinite(integrand, decay_hint=big_e - p - e, tol=tol).value
    j = proof_integral(case, params)
    lower = scale ** (p + 1.0 + e - big_e) * j
    ratio = numeric / lower
    logger.debug(f"a-integration {case.value}: numeric={numeric:.6g}, lower={lower:.6g}")
    return {
        "case": case.value,
        "e": e,
        "E": big_e,
        "lambda_abs": lam_abs,
        "omega": omega,
        "numeric": numeric,
        "lower": lower,
        "J": j,
        "ratio": ratio,
        "holds": numeric >= lower * (1.0 - 1e-8),
    }


def case_sample_points(theorem) -> list:
    """One (d, s, p, tau) point per case of the theorem."""
    theorem = Theorem.parse(theorem)
    if theorem is Theorem.T1:
        return [
            SpectralParams(1, 0.5, 1.5, 0.1),
            SpectralParams(1, 0.5, 2.0, 0.1),
            SpectralParams(1, 0.5, 5.0, 0.1),
            SpectralParams(1, 0.5, 3.0, 0.1),
        ]
    if theorem is Theorem.T1b:
        return [
            SpectralParams(1, 1.0, 3.0, 0.1),
            SpectralParams(1, 1.0, 2.0, 0.1),
            SpectralParams(1, 1.0, 1.2, 0.1),
            SpectralParams(1, 0.55, 1.2, 0.1),
        ]
    return [SpectralParams(1, 0.5, 2.0, 0.1), SpectralParams(1, 1.0, 2.0, 0.1)]
