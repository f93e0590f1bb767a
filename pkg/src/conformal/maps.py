"""Conformal maps between the unit disc and the slit plane C \\ [0, inf).

phi_a(z) = -a ((z+1)/(z-1))^2 sends the disc onto the resolvent set of the
fractional Laplacian; g(lambda) = -1/(a+lambda) sends it onto the complement of
the segment [-1/a, 0].
"""

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

from src.utils.errors import DomainError, PoleError

BOUNDARY_TOL = 1e-14


class DistortionBounds(NamedTuple):
    lower: float
    upper: float


class SegmentDistance(NamedTuple):
    g: complex
    actual: float
    lower: float


class CmResiduals(NamedTuple):
    plus: float
    minus: float


@dataclass(frozen=True)
class MapParam:
    a: float

    def __post_init__(self):
        if not self.a > 0:
            raise DomainError(f"map parameter must satisfy a > 0, got a={self.a}")


def _param(a) -> MapParam:
    return a if isinstance(a, MapParam) else MapParam(float(a))


def on_ray(lam: complex) -> bool:
    """True when lambda lies on [0, inf) up to 1e-14 (1 + |lambda|)."""
    lam = complex(lam)
    slack = BOUNDARY_TOL * (1.0 + abs(lam))
    return abs(lam.imag) <= slack and lam.real >= -slack


def _check_disc(z: complex) -> complex:
    z = complex(z)
    if abs(z) >= 1.0 - BOUNDARY_TOL:
        raise DomainError(f"point must lie in the open unit disc, got |z|={abs(z):.17g}")
    return z


def _check_slit(lam: complex) -> complex:
    lam = complex(lam)
    if on_ray(lam):
        raise DomainError(f"point must lie off the ray [0, inf), got lambda={lam}")
    return lam


def slit_sqrt(lam: complex) -> complex:
    """Square root with the cut along [0, inf): arg(lambda) taken in (0, 2 pi).

    Im sqrt(lambda) >= 0 on the whole slit plane; sqrt(-1) = i.
    """
    lam = complex(lam)
    theta = cmath.phase(lam)
    if theta < 0.0 or (theta == 0.0 and lam.real < 0.0):
        theta += 2.0 * math.pi
    return math.sqrt(abs(lam)) * cmath.exp(0.5j * theta)


def dist_to_ray(lam: complex) -> float:
    """Distance from lambda to [0, inf)."""
    lam = complex(lam)
    if lam.real >= 0.0:
        return abs(lam.imag)
    return abs(lam)


def phi(a, z: complex) -> complex:
    a = _param(a).a
    z = _check_disc(z)
    return -a * ((z + 1.0) / (z - 1.0)) ** 2


def phi_inv(a, lam: complex) -> complex:
    a = _param(a).a
    lam = _check_slit(lam)
    root = slit_sqrt(lam)
    ia = 1j * math.sqrt(a)
    return (root - ia) / (root + ia)


def distortion_disc(a, z: complex) -> DistortionBounds:
    """Koebe sandwich of d(phi_a(z), R+) in terms of the disc geometry."""
    a = _param(a).a
    z = _check_disc(z)
    core = a * (1.0 - abs(z)) * abs(z + 1.0) / abs(z - 1.0) ** 3
    return DistortionBounds(core, 8.0 * core)


def distortion_ray(a, lam: complex) -> DistortionBounds:
    """Sandwich of 1 - |phi_a^{-1}(lambda)| in terms of the slit-plane geometry."""
    a = _param(a).a
    lam = _check_slit(lam)
    modulus = abs(lam)
    if modulus == 0.0:
        raise DomainError("distortion_ray is undefined at lambda = 0")
    core = math.sqrt(a) * dist_to_ray(lam) / (math.sqrt(modulus) * (a + modulus))
    return DistortionBounds(core / 4.0, 4.0 * core)


def cm_identities(a, lam: complex) -> CmResiduals:
    """Residuals of |z+1| = 2 sqrt|lambda| / |sqrt(lambda) + i sqrt(a)| and
    |z-1| = 2 sqrt(a) / |sqrt(lambda) + i sqrt(a)| for z = phi_a^{-1}(lambda).
    """
    a = _param(a).a
    z = phi_inv(a, lam)
    denom = abs(slit_sqrt(lam) + 1j * math.sqrt(a))
    plus = abs(abs(z + 1.0) - 2.0 * math.sqrt(abs(lam)) / denom)
    minus = abs(abs(z - 1.0) - 2.0 * math.sqrt(a) / denom)
    return CmResiduals(plus, minus)


def segment_distance(w: complex, lo: float, hi: float) -> float:
    """Distance from w to the real segment [lo, hi] by clamped projection."""
    w = complex(w)
    x = min(max(w.real, lo), hi)
    return abs(w - x)


def g_map(a, lam: complex) -> complex:
    a = _param(a).a
    lam = complex(lam)
    if abs(a + lam) <= BOUNDARY_TOL * (1.0 + abs(lam)):
        raise PoleError(f"g(lambda) = -1/(a+lambda) has a pole at lambda = -a = {-a}")
    return -1.0 / (a + lam)


def g_dist_bound(a, lam: complex) -> SegmentDistance:
    """d(g(lambda), [-1/a, 0]) against its lower bound d(lambda, R+) / (2 sqrt5 (a+|lambda|)^2)."""
    a = _param(a).a
    g = g_map(a, lam)
    actual = segment_distance(g, -1.0 / a, 0.0)
    lower = dist_to_ray(lam) / (2.0 * math.sqrt(5.0) * (a + abs(lam)) ** 2)
    return SegmentDistance(g, actual, lower)
