"""L^p norms of the free resolvent symbol (lambda - |xi|^{2s})^{-1} on R^d.

`resolvent_lp_direct` evaluates the p-th power of the norm by radial quadrature;
`bound_BR` (s <= d/2) and `bound_BR1` (s > d/2) are the closed-form upper bounds
with their constants assembled in `resolvent_constants`.
"""

import logging
import math
from dataclasses import asdict, dataclass
from typing import List, Optional

from src.conformal.maps import dist_to_ray, on_ray
from src.numerics.integrals import integral_algebraic, quad_interval, sphere_area
from src.utils.config import QUAD_TOL
from src.utils.errors import DomainError, WrongRegimeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResolventConstants:
    d: int
    s: float
    p: float
    delta: float
    c_ds: float
    c_prime_ds: float
    j0: float
    j_delta: float
    k1: Optional[float] = None
    k2: Optional[float] = None
    m1: Optional[float] = None
    k3: Optional[float] = None
    n1: Optional[float] = None

    @property
    def low_order(self) -> bool:
        """True in the regime s <= d/2, where bound_BR applies."""
        return self.delta >= 0.0

    def to_dict(self) -> dict:
        return asdict(self)


def _check_dims(d: int, s: float):
    if int(d) != d or d < 1:
        raise DomainError(f"dimension must be a positive integer, got d={d}")
    if not s > 0.0:
        raise DomainError(f"fractional order must satisfy s > 0, got s={s}")


def _check_off_ray(lam: complex) -> complex:
    lam = complex(lam)
    if on_ray(lam):
        raise DomainError(f"lambda must lie off [0, inf), got {lam}")
    return lam


def _resonance_points(center: float, width: float, reach: float) -> List[float]:
    """center and center +/- width 2^k up to `reach`."""
    points = [center]
    offset = width
    while offset < reach:
        points.extend((center - offset, center + offset))
        offset *= 2.0
    return sorted(points)


def resolvent_lp_direct(d: int, s: float, p: float, lam: complex, tol: float = QUAD_TOL) -> float:
    """sphere_area(d) * int_0^inf r^{d-1} |r^{2s} - lambda|^{-p} dr.

    With r^{2s} = |lambda| w the integral becomes
    |lambda|^{d/2s-p} / 2s * int_0^inf w^{d/2s-1} |w - lambda_hat|^{-p} dw, lambda_hat = lambda/|lambda|.
    For Re lambda_hat = x > 0 the integrand peaks at w = x with width |Im lambda_hat|, so
    [x/2, 3x/2] is integrated on geometric shells around x. The w^{d/2s-1} singularity
    at 0 and the tail (mapped by w = w1/u) go through QAWS weights.
    """
    _check_dims(d, s)
    lam = _check_off_ray(lam)
    if not p > d / (2.0 * s):
        raise DomainError(f"resolvent norm diverges: need p > d/2s = {d / (2.0 * s):g}, got p={p}")

    modulus = abs(lam)
    unit = lam / modulus
    exponent = d / (2.0 * s) - 1.0

    def kernel(w: float) -> float:
        return abs(w - unit) ** (-p)

    if unit.real > 0.0:
        x = unit.real
        w0, w1 = 0.5 * x, 1.5 * x
        core = quad_interval(
            lambda w: w ** exponent * kernel(w), w0, w1, tol=tol,
            points=_resonance_points(x, abs(unit.imag), 0.5 * x),
        ).value
    else:
        w0 = w1 = 1.0
        core = 0.0

    near = quad_interval(kernel, 0.0, w0, tol=tol, endpoint_power=exponent).value

    def tail(u: float) -> float:
        return abs(w1 - unit * u) ** (-p)

    far = w1 ** (exponent + 1.0) * quad_interval(
        tail, 0.0, 1.0, tol=tol, endpoint_power=p - exponent - 2.0
    ).value

    value = sphere_area(d) * modulus ** (d / (2.0 * s) - p) / (2.0 * s) * (near + core + far)
    logger.debug(f"resolvent_lp_direct d={d} s={s} p={p} lambda={lam}: {value:.12g}")
    return value


def resolvent_constants(d: int, s: float, p: float) -> ResolventConstants:
    """Every constant of the two resolvent bounds.

    delta = d/2s - 1, C = max{1, 2^{delta-1}}, C' = max{1, 2^{1-delta}}. For
    delta >= 0: K1 = max{(1+C) J0, C J_delta}, K2 = K1 C' 2^{delta/2},
    M1 = max{K2, J_delta}. For delta < 0: K3 = 1/(delta+1) + 2 J0,
    N1 = max{J_delta, K3}. Here J_x = int_0^inf t^x (t^2+1)^{-p/2} dt.
    """
    _check_dims(d, s)
    if not p > max(1.0, d / (2.0 * s)):
        raise DomainError(f"resolvent constants need p > max(1, d/2s) = {max(1.0, d / (2.0 * s)):g}, got p={p}")

    delta = d / (2.0 * s) - 1.0
    c_ds = max(1.0, 2.0 ** (delta - 1.0))
    c_prime = max(1.0, 2.0 ** (1.0 - delta))
    j0 = integral_algebraic(0.0, p)
    j_delta = integral_algebraic(delta, p)

    if delta >= 0.0:
        k1 = max((1.0 + c_ds) * j0, c_ds * j_delta)
        k2 = k1 * c_prime * 2.0 ** (delta / 2.0)
        m1 = max(k2, j_delta)
        return ResolventConstants(d, s, p, delta, c_ds, c_prime, j0, j_delta, k1=k1, k2=k2, m1=m1)

    k3 = 1.0 / (delta + 1.0) + 2.0 * j0
    n1 = max(j_delta, k3)
    return ResolventConstants(d, s, p, delta, c_ds, c_prime, j0, j_delta, k3=k3, n1=n1)


def bound_BR(d: int, s: float, p: float, lam: complex) -> float:
    """v/(2s) * M1 * |lambda|^{d/2s-1} / d(lambda, R+)^{p-1}, for 0 < s <= d/2."""
    _check_dims(d, s)
    if s > d / 2.0:
        raise WrongRegimeError(f"bound_BR needs s <= d/2, got s={s}, d={d}", use_instead="bound_BR1")
    lam = _check_off_ray(lam)
    if not p > d / (2.0 * s):
        raise DomainError(f"bound_BR needs p > d/2s = {d / (2.0 * s):g}, got p={p}")
    constants = resolvent_constants(d, s, p)
    return (
        sphere_area(d) / (2.0 * s) * constants.m1
        * abs(lam) ** (d / (2.0 * s) - 1.0) / dist_to_ray(lam) ** (p - 1.0)
    )


def bound_BR1(d: int, s: float, p: float, lam: complex) -> float:
    """v/(2s) * N1 / d(lambda, R+)^{p-d/2s}, for s > d/2."""
    _check_dims(d, s)
    if s <= d / 2.0:
        raise WrongRegimeError(f"bound_BR1 needs s > d/2, got s={s}, d={d}", use_instead="bound_BR")
    lam = _check_off_ray(lam)
    if not p > 1.0:
        raise DomainError(f"bound_BR1 needs p > 1, got p={p}")
    constants = resolvent_constants(d, s, p)
    return sphere_area(d) / (2.0 * s) * constants.n1 / dist_to_ray(lam) ** (p - d / (2.0 * s))


def bound_negative_axis(d: int, s: float, p: float, lam: complex) -> float:
    """Sharper bound for Re lambda < 0 in either regime.

    v/(2s) * J_{d/2s-1} * |lambda|^{d/2s-1} / d(lambda, R+)^{p-1}.
    """
    _check_dims(d, s)
    lam = complex(lam)
    if not lam.real < 0.0:
        raise DomainError(f"negative-axis bound needs Re lambda < 0, got {lam}")
    if not p > d / (2.0 * s):
        raise DomainError(f"negative-axis bound needs p > d/2s = {d / (2.0 * s):g}, got p={p}")
    j_delta = integral_algebraic(d / (2.0 * s) - 1.0, p)
    return (
        sphere_area(d) / (2.0 * s) * j_delta
        * abs(lam) ** (d / (2.0 * s) - 1.0) / dist_to_ray(lam) ** (p - 1.0)
    )


def resolvent_bound(d: int, s: float, p: float, lam: complex) -> float:
    """The regime-appropriate closed-form bound; s = d/2 belongs to bound_BR."""
    if s <= d / 2.0:
        return bound_BR(d, s, p, lam)
    return bound_BR1(d, s, p, lam)


def bound_name(d: int, s: float) -> str:
    return "BR" if s <= d / 2.0 else "BR1"


def check_dominance(d: int, s: float, p: float, lam: complex, tol: float = QUAD_TOL) -> dict:
    """Direct value against the regime bound (and the negative-axis bound when it applies)."""
    direct = resolvent_lp_direct(d, s, p, lam, tol=tol)
    bound = resolvent_bound(d, s, p, lam)
    row = {
        "lambda": [complex(lam).real, complex(lam).imag],
        "direct": direct,
        "bound": bound,
        "bound_name": bound_name(d, s),
        "ratio": direct / bound,
        "holds": direct < bound,
    }
    if complex(lam).real < 0.0:
        refined = bound_negative_axis(d, s, p, lam)
        row["negative_axis_bound"] = refined
        row["negative_axis_holds"] = direct <= refined * (1.0 + 1e-10)
    if not math.isfinite(row["ratio"]):
        row["holds"] = False
    return row
