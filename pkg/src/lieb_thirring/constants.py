"""Constant ledgers of the three eigenvalue-sum bounds.

For T1 and T1b only the explicit part of the constant is available (the zero-counting
constant of the disc step is not explicit); T2 is explicit end to end.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from src.lieb_thirring.exponents import Case, ExponentSpec, case_dispatch, exponents
from src.lieb_thirring.integration import proof_integral
from src.lieb_thirring.params import SpectralParams, Theorem
from src.numerics.integrals import integral_algebraic, integral_rational, sphere_area
from src.operators.determinant import reg_det_order
from src.operators.discretize import OmegaData
from src.resolvent.bounds import resolvent_constants
from src.utils.config import gamma_constant
from src.utils.errors import DomainError

logger = logging.getLogger(__name__)


class GrowthConstants(NamedTuple):
    """K1 = Gamma_p v/(2s (2 pi)^d) M1 and K2 = 4^p K1 C_omega^p for s <= d/2;
    K4, K5 the same with N1 for s > d/2."""

    gamma_p: float
    base: float
    amplified: float
    low_order: bool


def growth_constants(d: int, s: float, p: float, c_omega: float) -> GrowthConstants:
    gamma_p = gamma_constant(reg_det_order(p))
    resolvent = resolvent_constants(d, s, p)
    factor = gamma_p / (2.0 * math.pi) ** d * sphere_area(d) / (2.0 * s)
    base = factor * (resolvent.m1 if resolvent.low_order else resolvent.n1)
    return GrowthConstants(gamma_p, base, 4.0 ** p * base * c_omega ** p, resolvent.low_order)


def comparison_constant(d: int, s: float, p: float) -> float:
    """K1 of the resolvent-comparison route: v/(2s (2 pi)^d) int_0^inf t^{d/2s-1} (t^2+1)^{-p/2} dt."""
    return sphere_area(d) / (2.0 * s * (2.0 * math.pi) ** d) * integral_algebraic(d / (2.0 * s) - 1.0, p)


def _positive(x: float) -> float:
    return max(x, 0.0)


def unified_integral(theorem: Theorem, params: SpectralParams) -> float:
    """I_j from the single formula covering every case of the theorem."""
    p, tau, h, r = params.p, params.tau, params.half_ratio, params.ratio
    if theorem is Theorem.T1:
        top = p + 0.5 * _positive(p - r - 2.0 - tau)
        bottom = p + 1.0 + 2.0 * tau + 0.5 * max(r - p - 2.0 * tau, 0.0, p - r - 2.0 - tau)
    elif theorem is Theorem.T1b:
        top = p + 0.5 * _positive(p - 3.0 * h - 1.0 - tau)
        bottom = p + 1.0 + 2.0 * tau + 0.5 * max(p - 3.0 * h - 1.0 - tau, 0.0, h + 1.0 - p - tau)
    else:
        excess = _positive(p - h - 1.0 - tau)
        top = p + excess
        bottom = p + h + 1.0 + tau + excess
    return integral_rational(top, bottom)


def unified_delta(theorem: Theorem, params: SpectralParams) -> Optional[float]:
    p, tau, h, r = params.p, params.tau, params.half_ratio, params.ratio
    if theorem is Theorem.T1:
        return 3.5 * p + 1.5 * tau + min(p, r) - h
    if theorem is Theorem.T1b:
        return 2.0 * (2.0 * p + 1.0 - h + tau) - 0.5 * max(p - h - 1.0 + tau, 0.0, 3.0 * h - p - 1.0 + tau)
    return None


@dataclass
class ConstantsBundle:
    theorem: Theorem
    case: Case
    params: SpectralParams
    exponents: ExponentSpec
    integral: float
    proof_integral: float
    omega: float
    c_omega: float
    explicit_factor: float
    delta: Optional[float] = None
    gamma_p: Optional[float] = None
    k_constants: dict = field(default_factory=dict)

    @property
    def integral_index(self) -> int:
        return self.case.integral_index

    def rhs(self, v_norm_p: float) -> float:
        """Explicit part of the right-hand side for ||V||_p = v_norm_p."""
        return self.explicit_factor * v_norm_p ** self.params.p

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "case": self.case.value,
            "integral_index": self.integral_index,
            "params": self.params.to_dict(),
            "exponents": self.exponents.to_dict(),
            "integral": self.integral,
            "proof_integral": self.proof_integral,
            "delta": self.delta,
            "gamma_p": self.gamma_p,
            "k_constants": dict(self.k_constants),
            "omega": self.omega,
            "c_omega": self.c_omega,
            "explicit_factor": self.explicit_factor,
        }


def constants_bundle(theorem, params: SpectralParams, omega_data: Optional[OmegaData] = None) -> ConstantsBundle:
    """Every constant of the chosen bound.

    Without omega_data the bundle is evaluated at omega = 1, C_omega = 1.
    """
    theorem = Theorem.parse(theorem)
    case = case_dispatch(theorem, params)
    spec = exponents(theorem, params)
    omega = omega_data.omega if omega_data is not None else 1.0
    c_omega = omega_data.c_omega if omega_data is not None else 1.0
    if omega < 1.0:
        raise DomainError(f"omega must satisfy omega >= 1, got omega={omega}")
    d, s, p, tau = params.d, params.s, params.p, params.tau

    integral = unified_integral(theorem, params)
    j = proof_integral(case, params)

    if theorem is Theorem.T2:
        k1 = comparison_constant(d, s, p)
        factor = (2.0 * math.sqrt(5.0)) ** p * k1 * c_omega ** p * omega ** params.half_ratio / (integral * tau)
        bundle = ConstantsBundle(
            theorem, case, params, spec, integral, j, omega, c_omega, factor,
            k_constants={"K1": k1},
        )
    else:
        growth = growth_constants(d, s, p, c_omega)
        delta = unified_delta(theorem, params)
        factor = growth.base * c_omega ** p * 2.0 ** delta * omega ** (spec.beta - tau) / (integral * tau)
        names = ("K1", "K2") if theorem is Theorem.T1 else ("K4", "K5")
        bundle = ConstantsBundle(
            theorem, case, params, spec, integral, j, omega, c_omega, factor,
            delta=delta,
            gamma_p=growth.gamma_p,
            k_constants={names[0]: growth.base, names[1]: growth.amplified},
        )
    logger.debug(f"constants_bundle {theorem.value} {case.value}: explicit factor {bundle.explicit_factor:.6g}")
    return bundle
