"""Exponents of the three eigenvalue-sum bounds and the case split behind them.

Each summand is d(lambda, R+)^q / (|lambda|^alpha (1+|lambda|)^beta); the bound for
arbitrary s uses alpha = 0 and beta = d/2s + tau.
"""

import logging
import math
from dataclasses import asdict, dataclass
from enum import Enum

from src.lieb_thirring.params import SpectralParams, Theorem, check_admissible
from src.utils.errors import DomainError

logger = logging.getLogger(__name__)


class Case(str, Enum):
    """Proof case; the value names the I-integral it uses."""

    T1_CASE1 = "T1-case1"
    T1_CASE2 = "T1-case2"
    T1_CASE3A = "T1-case3a"
    T1_CASE3B = "T1-case3b"
    T1B_REGION1A = "T1b-region1a"
    T1B_REGION1B = "T1b-region1b"
    T1B_REGION2 = "T1b-region2"
    T1B_REGION3 = "T1b-region3"
    T2 = "T2"

    @property
    def integral_index(self) -> int:
        """j of I_j; 0 stands for the single integral of the resolvent-comparison route."""
        return _INTEGRAL_INDEX[self]


_INTEGRAL_INDEX = {
    Case.T1_CASE1: 1,
    Case.T1_CASE2: 2,
    Case.T1_CASE3A: 3,
    Case.T1_CASE3B: 4,
    Case.T1B_REGION1A: 5,
    Case.T1B_REGION1B: 6,
    Case.T1B_REGION2: 7,
    Case.T1B_REGION3: 8,
    Case.T2: 0,
}


@dataclass(frozen=True)
class ExponentSpec:
    theorem: Theorem
    q: float
    alpha: float
    beta: float

    def __post_init__(self):
        if not self.q > 0.0:
            raise DomainError(f"distance exponent must be positive, got q={self.q}")
        if self.alpha < 0.0 or self.beta < 0.0:
            raise DomainError(f"exponents must be nonnegative, got alpha={self.alpha}, beta={self.beta}")

    def denominator(self, lam: complex) -> float:
        modulus = abs(lam)
        return modulus ** self.alpha * (1.0 + modulus) ** self.beta

    def to_dict(self) -> dict:
        out = asdict(self)
        out["theorem"] = self.theorem.value
        return out


def _positive(x: float) -> float:
    return max(x, 0.0)


def case_dispatch(theorem, params: SpectralParams) -> Case:
    theorem = Theorem.parse(theorem)
    check_admissible(theorem, params)
    p, tau = params.p, params.tau
    if theorem is Theorem.T2:
        return Case.T2
    if theorem is Theorem.T1:
        if math.isclose(p, params.ratio, rel_tol=0.0, abs_tol=1e-12):
            return Case.T1_CASE2
        if p < params.ratio:
            return Case.T1_CASE1
        if p - params.ratio - 2.0 - tau >= 0.0:
            return Case.T1_CASE3A
        return Case.T1_CASE3B

    first = p - params.half_ratio - 1.0
    second = 3.0 * params.half_ratio - p - 1.0
    if first >= 0.0 and second < 0.0:
        if p - 3.0 * params.half_ratio - 1.0 > 0.0:
            return Case.T1B_REGION1A
        return Case.T1B_REGION1B
    if first < 0.0 and second < 0.0:
        return Case.T1B_REGION2
    if first < 0.0 and second >= 0.0:
        return Case.T1B_REGION3
    # first >= 0 and second >= 0 forces d/s >= 2, i.e. s <= d/2
    raise DomainError(f"empty parameter region reached for s > d/2: d={params.d}, s={params.s}, p={p}")


def tau_upper_bound(theorem, params: SpectralParams) -> float:
    """Supremum of admissible tau for the case (d, s, p) falls in."""
    theorem = Theorem.parse(theorem)
    case = case_dispatch(theorem, params)
    h, p = params.half_ratio, params.p
    if case is Case.T2:
        return math.inf
    if case is Case.T1_CASE1:
        return params.ratio - p
    if theorem is Theorem.T1:
        return 1.0
    if case in (Case.T1B_REGION1A, Case.T1B_REGION1B):
        return min(1.0, p + 1.0 - 3.0 * h)
    if case is Case.T1B_REGION2:
        return min(1.0, 1.0 + h - p, p + 1.0 - 3.0 * h)
    return min(1.0, 1.0 + h - p)


def exponents(theorem, params: SpectralParams) -> ExponentSpec:
    theorem = Theorem.parse(theorem)
    bound = tau_upper_bound(theorem, params)
    if not params.tau < bound:
        raise DomainError(
            f"{theorem.value} in {case_dispatch(theorem, params).value} needs tau < {bound:g}, got tau={params.tau}"
        )
    p, tau, h = params.p, params.tau, params.half_ratio
    if theorem is Theorem.T1:
        spec = ExponentSpec(
            theorem,
            q=p + tau,
            alpha=min((p + tau) / 2.0, h),
            beta=2.0 * tau + 0.5 * _positive(params.ratio - p - tau),
        )
    elif theorem is Theorem.T1b:
        spec = ExponentSpec(
            theorem,
            q=p + 1.0 - h + tau,
            alpha=0.5 + 0.5 * min(p - h + tau, 1.0),
            beta=2.0 * tau + 0.5 * _positive(h - p + 1.0 - tau),
        )
    else:
        spec = ExponentSpec(theorem, q=p, alpha=0.0, beta=h + tau)
    logger.debug(f"exponents {theorem.value} {params}: q={spec.q}, alpha={spec.alpha}, beta={spec.beta}")
    return spec


def lt_comparison_exponent(params: SpectralParams) -> dict:
    """max{(p+tau)/2, p - d/2s + tau} against q - alpha of T1.

    For real V the summand of T1 reduces to |lambda|^{q-alpha} / (1+|lambda|)^beta
    on the negative half-axis.
    """
    spec = exponents(Theorem.T1, params)
    comparison = max((params.p + params.tau) / 2.0, params.p - params.half_ratio + params.tau)
    small_lambda = spec.q - spec.alpha
    return {
        "comparison": comparison,
        "q_minus_alpha": small_lambda,
        "matches": math.isclose(comparison, small_lambda, rel_tol=1e-12, abs_tol=1e-12),
    }
