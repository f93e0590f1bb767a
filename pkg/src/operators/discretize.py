"""Periodic-box models of H0 = (-Delta)^s and H = H0 + V.

H0 acts as the Fourier multiplier m_k = |2 pi k / L|^{2s}; the dense matrix is
F* diag(m) F + diag(V) with F the unitary DFT on N^d points.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg

from src.conformal.maps import on_ray
from src.operators.eigen import svd
from src.operators.grid import Grid
from src.operators.potentials import Potential
from src.utils.config import ETA_TARGET, OMEGA_CAP
from src.utils.errors import DomainError, NoOmegaError, SingularityError

logger = logging.getLogger(__name__)

SINGULAR_RCOND = 1e-13


class BsCheck(NamedTuple):
    lhs: float
    rhs: float


class ShiftCheck(NamedTuple):
    lhs: float
    rhs: float


@dataclass(frozen=True)
class OmegaData:
    omega: float
    c_omega: float
    eta: float
    history: Tuple[Tuple[float, float], ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.eta < 1.0:
            raise DomainError(f"omega data needs eta < 1, got eta={self.eta}")

    def to_dict(self) -> dict:
        return {"omega": self.omega, "c_omega": self.c_omega, "eta": self.eta}


def dft_matrix(grid: Grid) -> np.ndarray:
    """Unitary DFT on N^d points: Kronecker power of the 1-d transform."""
    one = linalg.dft(grid.n, scale="sqrtn")
    out = one
    for _ in range(grid.d - 1):
        out = np.kron(out, one)
    return out


def multipliers(grid: Grid, s: float) -> np.ndarray:
    """|2 pi k / L|^{2s} in DFT order."""
    if not s > 0.0:
        raise DomainError(f"fractional order must satisfy s > 0, got s={s}")
    k2 = np.sum(grid.frequencies ** 2, axis=1)
    return (2.0 * np.pi / grid.length) ** (2.0 * s) * k2 ** s


@dataclass(frozen=True)
class DiscretizedOperator:
    grid: Grid
    s: float
    potential: Optional[Potential] = None

    def __post_init__(self):
        if not self.s > 0.0:
            raise DomainError(f"fractional order must satisfy s > 0, got s={self.s}")
        if self.potential is not None and self.potential.grid != self.grid:
            raise DomainError("potential was sampled on a different grid")

    @cached_property
    def multipliers(self) -> np.ndarray:
        return multipliers(self.grid, self.s)

    @cached_property
    def fourier(self) -> np.ndarray:
        return dft_matrix(self.grid)

    @cached_property
    def free_matrix(self) -> np.ndarray:
        f = self.fourier
        return f.conj().T @ (self.multipliers[:, None] * f)

    @cached_property
    def matrix(self) -> np.ndarray:
        if self.potential is None:
            return self.free_matrix
        return self.free_matrix + np.diag(self.potential.values)

    @property
    def size(self) -> int:
        return self.grid.size

    def sorted_multipliers(self) -> np.ndarray:
        return np.sort(self.multipliers)

    def free_resolvent(self, lam: complex) -> np.ndarray:
        """(lambda - H0)^{-1} as a dense matrix."""
        lam = complex(lam)
        if on_ray(lam):
            raise DomainError(f"lambda must lie off [0, inf), got {lam}")
        f = self.fourier
        return f.conj().T @ ((1.0 / (lam - self.multipliers))[:, None] * f)

    def weighted_resolvent(self, lam: complex) -> np.ndarray:
        """diag(V) (lambda - H0)^{-1}."""
        v = self.potential.values if self.potential is not None else np.zeros(self.size)
        return v[:, None] * self.free_resolvent(lam)


def assemble_h0(grid: Grid, s: float) -> DiscretizedOperator:
    return DiscretizedOperator(grid, s)


def assemble_h(grid: Grid, s: float, potential: Potential) -> DiscretizedOperator:
    return DiscretizedOperator(grid, s, potential)


def lp_norm(potential: Potential, p: float) -> float:
    return potential.lp_norm(p)


def schatten_norm(matrix, p: float) -> float:
    """(sum sigma_k^p)^{1/p}; p = inf is the operator norm."""
    sigma = svd(matrix)
    if len(sigma) == 0:
        return 0.0
    if np.isinf(p):
        return float(sigma[0])
    if p < 1.0:
        raise DomainError(f"Schatten norms need p >= 1, got p={p}")
    return float(np.sum(sigma ** p) ** (1.0 / p))


def bs_check(grid: Grid, s: float, p: float, potential: Potential, lam: complex) -> BsCheck:
    """||V (lambda - H0)^{-1}||_{S_p}^p against N^{-d} sum|V|^p sum|lambda - m_k|^{-p}.

    Only p >= 2 is checked; equality holds at p = 2.
    """
    if p < 2.0:
        raise DomainError(f"the discrete Birman-Solomyak check needs p >= 2, got p={p}")
    op = assemble_h(grid, s, potential)
    lam = complex(lam)
    if on_ray(lam):
        raise DomainError(f"lambda must lie off [0, inf), got {lam}")
    if potential.is_zero:
        return BsCheck(0.0, 0.0)
    lhs = schatten_norm(op.weighted_resolvent(lam), p) ** p
    rhs = (
        grid.size ** -1.0
        * float(np.sum(np.abs(potential.values) ** p))
        * float(np.sum(np.abs(lam - op.multipliers) ** -p))
    )
    return BsCheck(lhs, rhs)


def find_omega(
    grid: Grid,
    s: float,
    p: float,
    potential: Potential,
    eta_target: float = ETA_TARGET,
    cap: float = OMEGA_CAP,
) -> OmegaData:
    """First omega in 1, 2, 4, ... with ||V (-omega - H0)^{-1}|| <= eta_target.

    C_omega = 1 / (1 - eta) with eta the measured norm.
    """
    if not 0.0 < eta_target < 1.0:
        raise DomainError(f"eta target must lie in (0, 1), got {eta_target}")
    if not p >= 1.0:
        raise DomainError(f"Schatten exponent must satisfy p >= 1, got p={p}")
    op = assemble_h(grid, s, potential)
    omega = 1.0
    history: List[Tuple[float, float]] = []
    while True:
        eta = schatten_norm(op.weighted_resolvent(-omega), np.inf)
        history.append((omega, eta))
        logger.debug(f"find_omega: omega={omega:g}, eta={eta:.6g}")
        if eta <= eta_target:
            return OmegaData(omega, 1.0 / (1.0 - eta), eta, tuple(history))
        if omega * 2.0 > cap:
            raise NoOmegaError(f"no omega <= {cap:g} reaches eta <= {eta_target}", eta, omega)
        omega *= 2.0


def _smallest_singular_value(matrix: np.ndarray) -> float:
    sigma = svd(matrix)
    if sigma[-1] <= SINGULAR_RCOND * max(sigma[0], 1.0):
        raise SingularityError(f"matrix is numerically singular (sigma_min={sigma[-1]:.3e})")
    return float(sigma[-1])


def resolvent_shift_check(
    grid: Grid,
    s: float,
    potential: Potential,
    omega_data: OmegaData,
    a: float,
) -> ShiftCheck:
    """||(-a-H)^{-1}|| against C_omega / |omega - a| for a > omega."""
    if not a > omega_data.omega:
        raise DomainError(f"shift needs a > omega = {omega_data.omega:g}, got a={a}")
    op = assemble_h(grid, s, potential)
    shifted = op.matrix + a * np.eye(op.size)
    lhs = 1.0 / _smallest_singular_value(shifted)
    rhs = omega_data.c_omega / abs(omega_data.omega - a)
    return ShiftCheck(lhs, rhs)


def _inverse(matrix: np.ndarray) -> np.ndarray:
    _smallest_singular_value(matrix)
    try:
        return linalg.inv(matrix)
    except linalg.LinAlgError as e:
        raise SingularityError(f"inversion failed: {e}") from e


def resolvent_pair(grid: Grid, s: float, potential: Potential, a: float) -> Tuple[np.ndarray, np.ndarray]:
    """((-a-H0)^{-1}, (-a-H)^{-1})."""
    op = assemble_h(grid, s, potential)
    eye = np.eye(op.size)
    return _inverse(-a * eye - op.free_matrix), _inverse(-a * eye - op.matrix)


def schatten_resolution_trend(
    make_potential: Callable[[Grid], Potential],
    d: int,
    s: float,
    p: float,
    length: float,
    resolutions: Sequence[int] = (16, 32, 64),
    lam: complex = -1.0,
    growth_tolerance: float = 0.1,
) -> dict:
    """||V (lambda - H0)^{-1}||_{S_p} as N doubles at fixed L.

    `bounded` is set when the last refinement grows the norm by at most
    `growth_tolerance` (relative).
    """
    if not p > max(1.0, d / (2.0 * s)):
        raise DomainError(f"trend needs p > max(1, d/2s) = {max(1.0, d / (2.0 * s)):g}, got p={p}")
    norms = []
    for n in resolutions:
        grid = Grid(d, n, length)
        op = assemble_h(grid, s, make_potential(grid))
        norms.append(schatten_norm(op.weighted_resolvent(lam), p))
    growth = norms[-1] / norms[-2] if len(norms) > 1 and norms[-2] > 0 else 1.0
    return {
        "resolutions": list(resolutions),
        "norms": norms,
        "growth": growth,
        "bounded": growth <= 1.0 + growth_tolerance,
    }
