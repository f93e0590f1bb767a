"""Resolvent-comparison route for arbitrary s.

With A = (-a-H0)^{-1} (self-adjoint, spectrum on a real segment) and B = (-a-H)^{-1},
each eigenvalue mu of B lies within ||B - A||_{S_p} of the hull of sigma(A) in the
p-summed sense, and mu = -1/(a+lambda) for the eigenvalues lambda of H.
"""

import logging
import math
from typing import NamedTuple, Optional, Tuple

import numpy as np

from src.conformal.maps import dist_to_ray, segment_distance
from src.lieb_thirring.constants import comparison_constant
from src.operators.discretize import OmegaData, assemble_h, find_omega, resolvent_pair, schatten_norm
from src.operators.eigen import classify_discrete, eig, eigenvalues
from src.operators.grid import Grid
from src.operators.potentials import Potential
from src.utils.errors import DomainError, HypothesisError

logger = logging.getLogger(__name__)

NORMALITY_TOL = 1e-10
COLLINEARITY_TOL = 1e-10


class HansmannCheck(NamedTuple):
    lhs: float
    rhs: float


def hull_segment(values: np.ndarray) -> Tuple[complex, complex]:
    """Endpoints of the segment covering collinear points (farthest pair)."""
    values = np.asarray(values, dtype=complex)
    gaps = np.abs(values[:, None] - values[None, :])
    i, j = np.unravel_index(np.argmax(gaps), gaps.shape)
    start, end = complex(values[i]), complex(values[j])
    length = abs(end - start)
    if length > 0.0:
        direction = (end - start) / length
        # distance of every point from the line through the endpoints
        offsets = np.abs(((values - start) / direction).imag)
        if np.max(offsets) > COLLINEARITY_TOL * max(1.0, length):
            raise HypothesisError(f"spectrum of A is not collinear (max offset {np.max(offsets):.3e})")
    return start, end


def distance_to_segment(mu: complex, start: complex, end: complex) -> float:
    length = abs(end - start)
    if length == 0.0:
        return abs(mu - start)
    direction = (end - start) / length
    # rotate so that the segment is [0, length] on the real axis
    return segment_distance((mu - start) / direction, 0.0, length)


def hansmann_check(a_matrix, b_matrix, p: float) -> HansmannCheck:
    """sum_mu d(mu, hull sigma(A))^p over eigenvalues of B against ||B - A||_{S_p}^p."""
    a = np.asarray(a_matrix, dtype=complex)
    b = np.asarray(b_matrix, dtype=complex)
    if a.shape != b.shape:
        raise DomainError(f"A and B must have the same shape, got {a.shape} and {b.shape}")
    if p < 1.0:
        raise DomainError(f"hansmann_check needs p >= 1, got p={p}")
    commutator = a.conj().T @ a - a @ a.conj().T
    if np.linalg.norm(commutator) > NORMALITY_TOL * max(1.0, np.linalg.norm(a) ** 2):
        raise HypothesisError(f"A is not normal (||A*A - AA*|| = {np.linalg.norm(commutator):.3e})")
    start, end = hull_segment(eigenvalues(a))
    lhs = float(sum(distance_to_segment(mu, start, end) ** p for mu in eigenvalues(b)))
    rhs = schatten_norm(b - a, p) ** p
    return HansmannCheck(lhs, rhs)


def resolvent_hansmann_check(grid: Grid, s: float, p: float, potential: Potential, a: float) -> HansmannCheck:
    """hansmann_check on A = (-a-H0)^{-1}, B = (-a-H)^{-1}."""
    free, perturbed = resolvent_pair(grid, s, potential, a)
    return hansmann_check(free, perturbed, p)


def theorem2_pipeline_check(
    grid: Grid,
    s: float,
    p: float,
    potential: Potential,
    a: float,
    omega_data: Optional[OmegaData] = None,
) -> dict:
    """sum d(lambda, R+)^p / (a+|lambda|)^{2p} against
    (2 sqrt5)^p K1 C_omega^p a^{d/2s-p} / |omega-a|^p ||V||_p^p."""
    if omega_data is None:
        omega_data = find_omega(grid, s, p, potential)
    if not a > omega_data.omega:
        raise DomainError(f"the comparison route needs a > omega = {omega_data.omega:g}, got a={a}")
    d = grid.d
    if not p > max(1.0, d / (2.0 * s)):
        raise DomainError(f"the comparison route needs p > max(1, d/2s) = {max(1.0, d / (2.0 * s)):g}, got p={p}")
    spectrum = classify_discrete(eig(assemble_h(grid, s, potential).matrix))
    candidates = spectrum.discrete_candidates()
    lhs = float(sum(dist_to_ray(lam) ** p / (a + abs(lam)) ** (2.0 * p) for lam in candidates))
    k1 = comparison_constant(d, s, p)
    rhs = (
        (2.0 * math.sqrt(5.0)) ** p * k1 * omega_data.c_omega ** p
        * a ** (d / (2.0 * s) - p) / abs(omega_data.omega - a) ** p
        * potential.lp_norm(p) ** p
    )
    logger.debug(f"theorem2 pipeline: lhs={lhs:.6g}, rhs={rhs:.6g}, candidates={len(candidates)}")
    return {"lhs": lhs, "rhs": rhs, "candidates": len(candidates), "holds": lhs <= rhs}
