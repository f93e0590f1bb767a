"""Special-function values and semi-infinite quadrature.

Every constant of the resolvent bounds and of the Lieb-Thirring ledgers funnels
through the two Beta closed forms below; `quad_semiinfinite` is the independent
oracle they are cross-checked against.
"""

import logging
import math
from typing import Callable, NamedTuple, Optional, Sequence

import numpy as np
from scipy import integrate, special

from src.utils.config import QUAD_LIMIT, QUAD_TOL
from src.utils.errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

# QUADPACK ier = 2 message prefix
_ROUNDOFF_ONLY = "roundoff error is detected, which prevents"


class QuadResult(NamedTuple):
    value: float
    error: float


class PowerSumBounds(NamedTuple):
    lower: float
    value: float
    upper: float


def sphere_area(d: int) -> float:
    """Surface measure of the unit sphere S^{d-1}.

    2 for d = 1, else 2 pi^{d/2} / Gamma(d/2). This is the factor that makes the
    polar change of variables an equality; see `displayed_sphere_constant` for the
    displayed variant it replaces.
    """
    if int(d) != d or d <= 0:
        raise DomainError(f"sphere_area needs a positive integer dimension, got d={d}")
    if d == 1:
        return 2.0
    return 2.0 * math.pi ** (d / 2.0) / special.gamma(d / 2.0)


def displayed_sphere_constant(d: int) -> float:
    """The displayed constant v_{d-1} = 2 pi^{(d-1)/2} / Gamma((d-1)/2), with v_0 = 2.

    Kept for reports only: for d = 2 it gives 2 instead of the circumference 2 pi,
    so no bound in the toolkit uses it.
    """
    if int(d) != d or d <= 0:
        raise DomainError(f"displayed_sphere_constant needs a positive integer dimension, got d={d}")
    if d == 1:
        return 2.0
    return 2.0 * math.pi ** ((d - 1) / 2.0) / special.gamma((d - 1) / 2.0)


def integral_algebraic(delta: float, p: float) -> float:
    """int_0^inf t^delta (t^2+1)^{-p/2} dt = B((delta+1)/2, (p-delta-1)/2) / 2."""
    if not delta + 1.0 > 0.0:
        raise DomainError(f"integral_algebraic diverges at 0: need delta+1 > 0, got delta={delta}")
    if not p > delta + 1.0:
        raise DomainError(f"integral_algebraic diverges at infinity: need p > delta+1, got p={p}, delta={delta}")
    return 0.5 * float(special.beta((delta + 1.0) / 2.0, (p - delta - 1.0) / 2.0))


def integral_rational(a: float, b: float) -> float:
    """int_0^inf t^a (1+t)^{-b} dt = B(a+1, b-a-1)."""
    if not a > -1.0:
        raise DomainError(f"integral_rational diverges at 0: need a > -1, got a={a}")
    if not b > a + 1.0:
        raise DomainError(f"integral_rational diverges at infinity: need b > a+1, got a={a}, b={b}")
    return float(special.beta(a + 1.0, b - a - 1.0))


def quad_interval(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = QUAD_TOL,
    points: Optional[Sequence[float]] = None,
    limit: int = QUAD_LIMIT,
    endpoint_power: Optional[float] = None,
) -> QuadResult:
    """Adaptive Gauss-Kronrod on a finite interval with a relative+absolute target.

    With `endpoint_power` set, f is integrated against the weight (x - lo)^endpoint_power
    (QUADPACK QAWS), which absorbs an integrable algebraic singularity at lo.

    Raises ConvergenceError when the estimate is not finite, when QUADPACK flags
    the result (ier > 0; a roundoff flag is tolerated only if the error estimate
    still meets the target), or when the error estimate exceeds the target.
    """
    if hi <= lo:
        return QuadResult(0.0, 0.0)
    if endpoint_power is not None:
        out = integrate.quad(
            f, lo, hi,
            epsabs=tol, epsrel=tol,
            limit=limit,
            weight="alg", wvar=(endpoint_power, 0.0),
            full_output=1,
        )
    else:
        inner = [x for x in (points or ()) if lo < x < hi]
        out = integrate.quad(
            f, lo, hi,
            epsabs=tol, epsrel=tol,
            limit=limit,
            points=inner or None,
            full_output=1,
        )
    value, error = float(out[0]), float(out[1])
    # a fourth element (the message) is only present when QUADPACK reports ier > 0
    message = out[3] if len(out) > 3 else None
    target = max(tol, tol * abs(value))
    if not (math.isfinite(value) and math.isfinite(error)):
        raise ConvergenceError(f"quadrature on [{lo:g}, {hi:g}] is not finite", value, error)
    if message is not None and not (_ROUNDOFF_ONLY in message and error <= target):
        # divergence, subdivision limit, bad behaviour or extrapolation failure
        raise ConvergenceError(f"quadrature on [{lo:g}, {hi:g}] failed: {' '.join(message.split())}", value, error)
    if error > 10.0 * target:
        raise ConvergenceError(f"quadrature on [{lo:g}, {hi:g}] missed tolerance {tol:g}", value, error)
    return QuadResult(value, error)


def quad_semiinfinite(
    integrand: Callable[[float], float],
    decay_hint: float = 2.0,
    tol: float = QUAD_TOL,
    split: float = 1.0,
    points: Optional[Sequence[float]] = None,
    limit: int = QUAD_LIMIT,
) -> QuadResult:
    """Integrate a nonnegative continuous function over [0, inf).

    The half line is split at `split`; the tail [split, inf) is mapped by
    t = split/u onto (0, 1], where an integrand decaying like t^{-decay_hint}
    becomes integrable at u = 0.

    Args:
        integrand: f(t) >= 0 on [0, inf).
        decay_hint: claimed algebraic decay exponent, must exceed 1.
        tol: absolute (and relative) error target of each piece.
        split: where the head and the mapped tail meet.
        points: interior break points of the head piece (resonances).

    Returns:
        QuadResult(value, error) with error the summed QUADPACK estimates.
    """
    if not decay_hint > 1.0:
        raise DomainError(f"quad_semiinfinite needs decay_hint > 1, got {decay_hint}")
    if not split > 0.0:
        raise DomainError(f"split point must be positive, got {split}")

    # slow decay leaves an algebraic singularity u^{decay_hint-2} at u = 0; QAWS takes it as a weight
    weighted = decay_hint < 2.0

    def tail(u: float) -> float:
        if weighted:
            # QAWS samples the endpoint itself; the weighted remainder is continuous there
            u = max(u, 1e-12)
        elif u <= 0.0:
            return 0.0
        t = split / u
        value = integrand(t) * split / (u * u)
        return value * u ** (2.0 - decay_hint) if weighted else value

    head = quad_interval(integrand, 0.0, split, tol=tol, points=points, limit=limit)
    rest = quad_interval(
        tail, 0.0, 1.0, tol=tol, limit=limit,
        endpoint_power=decay_hint - 2.0 if weighted else None,
    )
    for piece in (head, rest):
        if piece.value < -piece.error:
            raise ConvergenceError("negative estimate for a nonnegative integrand", piece.value, piece.error)
    total = QuadResult(head.value + rest.value, head.error + rest.error)
    if total.error > 10.0 * max(tol, tol * abs(total.value)):
        raise ConvergenceError("semi-infinite quadrature missed tolerance", total.value, total.error)
    logger.debug(f"quad_semiinfinite: {total.value:.15g} +/- {total.error:.2e}")
    return total


def power_sum_bounds(a: float, b: float, alpha: float) -> PowerSumBounds:
    """min{1, 2^{alpha-1}}(a^alpha+b^alpha) <= (a+b)^alpha <= max{1, 2^{alpha-1}}(a^alpha+b^alpha)."""
    if a < 0 or b < 0:
        raise DomainError(f"power_sum_bounds needs a, b >= 0, got a={a}, b={b}")
    if not alpha > 0:
        raise DomainError(f"power_sum_bounds needs alpha > 0, got {alpha}")
    base = a ** alpha + b ** alpha
    factor = 2.0 ** (alpha - 1.0)
    return PowerSumBounds(min(1.0, factor) * base, (a + b) ** alpha, max(1.0, factor) * base)


def algebraic_integrand(delta: float, p: float) -> Callable[[float], float]:
    return lambda t: t ** delta * (t * t + 1.0) ** (-p / 2.0)


def rational_integrand(a: float, b: float) -> Callable[[float], float]:
    return lambda t: t ** a * (1.0 + t) ** (-b)


def cross_check_algebraic(delta: float, p: float, tol: float = QUAD_TOL) -> float:
    """Relative gap between the Beta closed form and quadrature."""
    exact = integral_algebraic(delta, p)
    numeric = quad_semiinfinite(algebraic_integrand(delta, p), decay_hint=p - delta, tol=tol).value
    return abs(numeric - exact) / abs(exact)


def cross_check_rational(a: float, b: float, tol: float = QUAD_TOL) -> float:
    exact = integral_rational(a, b)
    numeric = quad_semiinfinite(rational_integrand(a, b), decay_hint=b - a, tol=tol).value
    return abs(numeric - exact) / abs(exact)


def gaussian_moment_check(d: int, tol: float = QUAD_TOL) -> float:
    """sphere_area(d) * int_0^inf r^{d-1} e^{-r^2} dr against pi^{d/2}, relative gap."""
    radial = quad_semiinfinite(lambda r: r ** (d - 1) * np.exp(-r * r), decay_hint=2.0, tol=tol).value
    return abs(sphere_area(d) * radial - math.pi ** (d / 2.0)) / math.pi ** (d / 2.0)
