"""Zero sums of holomorphic functions on the disc against their growth envelope.

A function h on the disc with h(0) = 1 and
    log|h(z)| <= K (1-|z|)^{-alpha} prod_j |z - zeta_j|^{-beta_j}
has zeros satisfying
    sum (1-|z|)^{alpha+1+tau} prod_j |z - zeta_j|^{(beta_j-1+tau)_+} <= C K
with C non-explicit. This module evaluates both sides on samples.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.conformal.maps import phi, phi_inv
from src.lieb_thirring.constants import growth_constants
from src.operators.determinant import PerturbationDeterminant
from src.operators.discretize import OmegaData, assemble_h
from src.operators.eigen import classify_discrete, eig
from src.operators.grid import Grid
from src.operators.potentials import Potential
from src.utils.config import BGK_ANGLES, BGK_NORMALIZATION_TOL, BGK_RADII
from src.utils.errors import DomainError, NormalizationError

logger = logging.getLogger(__name__)

Boundary = Sequence[Tuple[complex, float]]


@dataclass(frozen=True)
class GrowthEnvelope:
    k: float
    alpha: float
    boundary: Tuple[Tuple[complex, float], ...] = ()

    def __post_init__(self):
        if self.k < 0.0 or self.alpha < 0.0:
            raise DomainError(f"envelope needs K >= 0 and alpha >= 0, got K={self.k}, alpha={self.alpha}")
        for zeta, beta in self.boundary:
            if abs(abs(zeta) - 1.0) > 1e-12:
                raise DomainError(f"boundary point must lie on the unit circle, got |zeta|={abs(zeta)}")
            if beta < 0.0:
                raise DomainError(f"boundary exponent must be >= 0, got beta={beta}")

    def log_bound(self, z: complex) -> float:
        """K (1-|z|)^{-alpha} prod |z - zeta_j|^{-beta_j}."""
        z = complex(z)
        weight = np.prod([abs(z - zeta) ** beta for zeta, beta in self.boundary]) if self.boundary else 1.0
        return self.k / ((1.0 - abs(z)) ** self.alpha * weight)

    def to_dict(self) -> dict:
        return {
            "K": self.k,
            "alpha": self.alpha,
            "boundary": [{"zeta": [complex(z).real, complex(z).imag], "beta": b} for z, b in self.boundary],
        }


def _check_inside(zeros: Iterable[complex]) -> List[complex]:
    out = [complex(z) for z in zeros]
    for z in out:
        if abs(z) >= 1.0:
            raise DomainError(f"zeros must lie in the open unit disc, got |z|={abs(z)}")
    return out


def bgk_sum(zeros: Iterable[complex], alpha: float, tau: float, boundary: Boundary = ()) -> float:
    """sum (1-|z|)^{alpha+1+tau} prod_j |z - zeta_j|^{(beta_j - 1 + tau)_+}."""
    if not 0.0 < tau < 1.0:
        raise DomainError(f"bgk_sum needs 0 < tau < 1, got tau={tau}")
    total = 0.0
    for z in _check_inside(zeros):
        term = (1.0 - abs(z)) ** (alpha + 1.0 + tau)
        for zeta, beta in boundary:
            term *= abs(z - zeta) ** max(beta - 1.0 + tau, 0.0)
        total += term
    return total


def sample_points(radii: Sequence[float] = BGK_RADII, angles: int = BGK_ANGLES) -> np.ndarray:
    theta = 2.0 * math.pi * np.arange(angles) / angles
    return np.concatenate([r * np.exp(1j * theta) for r in radii])


def envelope_estimate(
    h: Callable[[complex], complex],
    alpha: float,
    boundary: Boundary = (),
    radii: Sequence[float] = BGK_RADII,
    angles: int = BGK_ANGLES,
) -> float:
    """max over samples of (log|h|)_+ (1-|z|)^alpha prod |z - zeta_j|^{beta_j}."""
    origin = complex(h(0.0))
    if abs(origin - 1.0) > BGK_NORMALIZATION_TOL:
        raise NormalizationError(f"h(0) must equal 1, got {origin}")
    best = 0.0
    for z in sample_points(radii, angles):
        value = abs(h(z))
        if value <= 1.0:
            continue
        weight = (1.0 - abs(z)) ** alpha
        for zeta, beta in boundary:
            weight *= abs(z - zeta) ** beta
        best = max(best, math.log(value) * weight)
    return best


def envelope_check(g: Callable[[complex], complex], envelope: GrowthEnvelope, points: Iterable[complex]) -> dict:
    """log|g(z)| <= K (1-|z|)^{-alpha} prod |z - zeta_j|^{-beta_j} at every point."""
    worst = -math.inf
    checked = 0
    violations = 0
    for z in points:
        value = abs(g(z))
        checked += 1
        if value == 0.0:
            continue
        margin = math.log(value) - envelope.log_bound(z)
        worst = max(worst, margin)
        if margin > 0.0:
            violations += 1
    return {"points": checked, "violations": violations, "worst_margin": worst, "holds": violations == 0}


def blaschke_product(zeros: Sequence[complex]) -> Callable[[complex], complex]:
    """prod_i b_{w_i}(z) / b_{w_i}(0) with b_w(z) = (z - w)/(1 - conj(w) z); equals 1 at 0."""
    zeros = _check_inside(zeros)
    if any(w == 0 for w in zeros):
        raise DomainError("a zero at the origin cannot be normalized to h(0) = 1")

    def h(z: complex) -> complex:
        z = complex(z)
        out = 1.0 + 0.0j
        for w in zeros:
            out *= ((z - w) / (1.0 - w.conjugate() * z)) / (-w)
        return out

    return h


@dataclass
class BlaschkeFamilyReport:
    tau: float
    rows: List[dict] = field(default_factory=list)

    @property
    def max_ratio(self) -> float:
        return max((row["ratio"] for row in self.rows), default=0.0)

    def to_dict(self) -> dict:
        return {"tau": self.tau, "max_ratio": self.max_ratio, "rows": list(self.rows)}


def blaschke_family_ratios(
    moduli: Sequence[float] = (0.5, 0.9, 0.99, 0.999),
    counts: Sequence[int] = (1, 5, 10, 20),
    tau: float = 0.5,
    seed: int = 0,
    radii: Sequence[float] = BGK_RADII,
    angles: int = BGK_ANGLES,
) -> BlaschkeFamilyReport:
    """bgk_sum / K_est with alpha = 0 over Blaschke products with zeros of fixed modulus."""
    rng = np.random.default_rng(seed)
    report = BlaschkeFamilyReport(tau=tau)
    for modulus in moduli:
        for count in counts:
            offsets = rng.random(count)
            zeros = modulus * np.exp(2j * math.pi * (np.arange(count) + offsets) / count)
            h = blaschke_product(zeros)
            total = bgk_sum(zeros, 0.0, tau)
            k_est = envelope_estimate(h, 0.0, (), radii, angles)
            ratio = total / k_est if k_est > 0.0 else math.inf
            report.rows.append({"modulus": modulus, "zeros": count, "sum": total, "K_est": k_est, "ratio": ratio})
    logger.info(f"Blaschke family: max ratio {report.max_ratio:.4g} over {len(report.rows)} products")
    return report


def lt_envelope(
    d: int,
    s: float,
    p: float,
    a: float,
    omega: float,
    c_omega: float,
    v_norm_p: float,
) -> GrowthEnvelope:
    """Growth envelope of g = f o phi_a.

    s <= d/2: K = K2 a^{d/2s} / |omega - a|^p ||V||_p^p, alpha = p - 1,
    beta = (d/s - p + 1)_+ at +1 and (p - d/s + 1)_+ at -1.
    s > d/2: K5 in place of K2, alpha = p - d/2s, beta = (3d/2s - p)_+ at +1 and (p - d/2s)_+ at -1.
    """
    if not a > omega:
        raise DomainError(f"lt_envelope needs a > omega = {omega:g}, got a={a}")
    if s <= d / 2.0:
        if not p > d / (2.0 * s):
            raise DomainError(f"lt_envelope needs p > d/2s = {d / (2.0 * s):g} for s <= d/2, got p={p}")
        alpha = p - 1.0
        plus, minus = d / s - p + 1.0, p - d / s + 1.0
    else:
        if not p > 1.0:
            raise DomainError(f"lt_envelope needs p > 1 for s > d/2, got p={p}")
        alpha = p - d / (2.0 * s)
        plus, minus = 3.0 * d / (2.0 * s) - p, p - d / (2.0 * s)
    growth = growth_constants(d, s, p, c_omega)
    k = growth.amplified * a ** (d / (2.0 * s)) / abs(omega - a) ** p * v_norm_p ** p
    return GrowthEnvelope(k, alpha, ((1.0 + 0.0j, max(plus, 0.0)), (-1.0 + 0.0j, max(minus, 0.0))))


def end_to_end_envelope(
    grid: Grid,
    s: float,
    p: float,
    potential: Potential,
    omega_data: OmegaData,
    a: Optional[float] = None,
    radii: Sequence[float] = (0.1, 0.5, 0.9),
    angles: int = 16,
) -> dict:
    """Envelope inequality for g = f o phi_a at the zeros of g and on sample circles."""
    a = 2.0 * omega_data.omega if a is None else a
    op = assemble_h(grid, s, potential)
    determinant = PerturbationDeterminant(op, a, p)
    envelope = lt_envelope(grid.d, s, p, a, omega_data.omega, omega_data.c_omega, potential.lp_norm(p))
    candidates = classify_discrete(eig(op.matrix)).discrete_candidates()
    zeros = [phi_inv(a, lam) for lam in candidates]

    def g(z: complex) -> complex:
        return determinant(phi(a, z))

    points = list(zeros) + list(sample_points(radii, angles))
    result = envelope_check(g, envelope, points)
    result["zeros"] = len(zeros)
    result["envelope"] = envelope.to_dict()
    return result
