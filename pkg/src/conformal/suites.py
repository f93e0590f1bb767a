import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np
from scipy.stats import qmc

from src.conformal.maps import (
    cm_identities,
    dist_to_ray,
    distortion_disc,
    distortion_ray,
    g_dist_bound,
    phi,
    phi_inv,
)

logger = logging.getLogger(__name__)

ROUND_TRIP_RTOL = 1e-12
EDGE_RTOL = 1e-12
DISC_RADIUS_MAX = 0.99
MODULUS_DECADES = (-2.0, 2.0)


@dataclass
class DistortionReport:
    a: float
    samples: int
    seed: int
    violations: Dict[str, int] = field(default_factory=dict)
    worst: Dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(count == 0 for count in self.violations.values())

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "samples": self.samples,
            "seed": self.seed,
            "violations": dict(self.violations),
            "worst": dict(self.worst),
            "passed": self.passed,
        }


def disc_samples(samples: int, seed: int, radius_max: float = DISC_RADIUS_MAX) -> np.ndarray:
    """Scrambled Halton points pushed onto the disc |z| <= radius_max (area-uniform)."""
    unit = qmc.Halton(d=2, scramble=True, seed=seed).random(samples)
    radius = radius_max * np.sqrt(unit[:, 0])
    angle = 2.0 * math.pi * unit[:, 1]
    return radius * np.exp(1j * angle)


def slit_samples(samples: int, seed: int, decades=MODULUS_DECADES) -> np.ndarray:
    """Points of C minus [0, inf) with log-uniform modulus and argument in (0, 2 pi)."""
    unit = qmc.Halton(d=2, scramble=True, seed=seed).random(samples)
    lo, hi = decades
    modulus = 10.0 ** (lo + (hi - lo) * unit[:, 0])
    # keep clear of the cut so the membership tolerance never triggers
    angle = 1e-6 + (2.0 * math.pi - 2e-6) * unit[:, 1]
    return modulus * np.exp(1j * angle)


class _Tally:
    def __init__(self):
        self.violations: Dict[str, int] = {}
        self.worst: Dict[str, float] = {}

    def record(self, name: str, excess: float):
        """excess > 0 counts as a violation; the largest excess is kept."""
        self.violations.setdefault(name, 0)
        self.worst[name] = max(self.worst.get(name, -math.inf), float(excess))
        if excess > 0:
            self.violations[name] += 1


def distortion_suite(a: float, samples: int = 10_000, seed: int = 0) -> DistortionReport:
    """Round trips, branch choice, |z +/- 1| identities and every distortion sandwich."""
    logger.info(f"Distortion suite: a={a}, samples={samples}, seed={seed}")
    tally = _Tally()
    discs = disc_samples(samples, seed)
    slits = slit_samples(samples, seed + 1)

    for z in discs:
        lam = phi(a, z)
        back = phi_inv(a, lam)
        tally.record("round_trip_disc", abs(back - z) - ROUND_TRIP_RTOL * max(1.0, abs(z)))
        dist = dist_to_ray(lam)
        lower, upper = distortion_disc(a, z)
        tally.record("distortion_disc_lower", lower - dist * (1.0 + EDGE_RTOL))
        tally.record("distortion_disc_upper", dist - upper * (1.0 + EDGE_RTOL))

    for lam in slits:
        z = phi_inv(a, lam)
        back = phi(a, z)
        tally.record("round_trip_ray", abs(back - lam) - ROUND_TRIP_RTOL * abs(lam))
        tally.record("disc_membership", abs(z) - 1.0)
        mirrored = phi_inv(a, lam.conjugate())
        tally.record("conjugate_symmetry", abs(mirrored - z.conjugate()) - ROUND_TRIP_RTOL)
        plus, minus = cm_identities(a, lam)
        tally.record("cm_identities", max(plus, minus) - ROUND_TRIP_RTOL * max(1.0, abs(z) + 1.0))
        lower, upper = distortion_ray(a, lam)
        gap = 1.0 - abs(z)
        tally.record("distortion_ray_lower", lower - gap * (1.0 + EDGE_RTOL))
        tally.record("distortion_ray_upper", gap - upper * (1.0 + EDGE_RTOL))
        if abs(a + lam) > 1e-8:
            _, actual, bound = g_dist_bound(a, lam)
            tally.record("g_dist", bound - actual * (1.0 + EDGE_RTOL))

    report = DistortionReport(a=a, samples=samples, seed=seed, violations=tally.violations, worst=tally.worst)
    if report.passed:
        logger.info(f"✅ Distortion suite a={a}: no violations")
    else:
        failing: List[str] = [k for k, v in report.violations.items() if v]
        logger.warning(f"❌ Distortion suite a={a}: violations in {failing}")
    return report
