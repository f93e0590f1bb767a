"""Regularized determinants and the perturbation determinant f(lambda) = det_n(I - F(lambda)).

F(lambda) = (lambda + a)(a + H)^{-1} V (lambda - H0)^{-1}, so that
I - F(lambda) = (a+H)^{-1} (lambda - H)(lambda - H0)^{-1} (a + H0) and the zeros of f
are the eigenvalues of H with their algebraic multiplicities.
"""

import logging
import math
from typing import Iterable, NamedTuple, Optional

import numpy as np
from scipy import linalg

from src.conformal.maps import dist_to_ray, on_ray
from src.operators.discretize import (
    DiscretizedOperator,
    OmegaData,
    assemble_h,
    find_omega,
    resolvent_shift_check,
    schatten_norm,
)
from src.operators.eigen import eig, eigenvalues
from src.operators.grid import Grid
from src.operators.potentials import Potential
from src.utils.config import A_OVER_OMEGA, gamma_constant
from src.utils.errors import DomainError, SingularityError

logger = logging.getLogger(__name__)

SINGULAR_RCOND = 1e-13


class GrowthCheck(NamedTuple):
    lhs: float
    rhs: float


class Winding(NamedTuple):
    count: int
    raw: float


def reg_det_order(p: float) -> int:
    """ceil(p), with p within 1e-12 of an integer treated as that integer."""
    if not p > 0.0:
        raise DomainError(f"determinant order needs p > 0, got p={p}")
    nearest = round(p)
    if abs(p - nearest) <= 1e-12 and nearest >= 1:
        return int(nearest)
    return int(math.ceil(p))


def log_det_regularized(n: int, values: Iterable[complex]) -> complex:
    """sum_k [log(1 - lambda_k) + sum_{j<n} lambda_k^j / j]; -inf real part when some lambda_k = 1."""
    if n < 1:
        raise DomainError(f"determinant order must be >= 1, got n={n}")
    lam = np.asarray(list(values), dtype=complex)
    if lam.size == 0:
        return 0.0 + 0.0j
    if np.any(lam == 1.0):
        return complex(-np.inf, 0.0)
    total = np.sum(np.log(1.0 - lam))
    power = np.ones_like(lam)
    for j in range(1, n):
        power = power * lam
        total += np.sum(power) / j
    return complex(total)


def det_regularized(n: int, values: Iterable[complex]) -> complex:
    """prod_k (1 - lambda_k) exp(sum_{j<n} lambda_k^j / j)."""
    log_value = log_det_regularized(n, values)
    if log_value.real == -np.inf:
        return 0.0 + 0.0j
    with np.errstate(over="ignore"):
        return complex(np.exp(log_value))


def det_growth_check(n: int, matrix, gamma: Optional[float] = None) -> GrowthCheck:
    """|det_n(I - A)| against exp(Gamma_n ||A||_{S_n}^n)."""
    gamma = gamma_constant(n) if gamma is None else gamma
    a = np.asarray(matrix, dtype=complex)
    lhs = abs(det_regularized(n, eigenvalues(a)))
    with np.errstate(over="ignore"):
        rhs = float(np.exp(gamma * schatten_norm(a, n) ** n))
    return GrowthCheck(lhs, rhs)


class PerturbationDeterminant:
    """f(lambda) for one discretized operator and shift a, with (a+H)^{-1} V F* cached."""

    def __init__(self, operator: DiscretizedOperator, a: float, p: float):
        if operator.potential is None:
            raise DomainError("the perturbation determinant needs a potential")
        self.operator = operator
        self.a = float(a)
        self.p = float(p)
        self.order = reg_det_order(p)
        shifted = operator.matrix + self.a * np.eye(operator.size)
        sigma = linalg.svdvals(shifted)
        if sigma[-1] <= SINGULAR_RCOND * max(sigma[0], 1.0):
            raise SingularityError(f"a + H is numerically singular at a={a} (sigma_min={sigma[-1]:.3e})")
        weighted = operator.potential.values[:, None] * operator.fourier.conj().T
        self._left = linalg.solve(shifted, weighted)
        logger.debug(f"PerturbationDeterminant: order={self.order}, a={self.a:g}, size={operator.size}")

    def operator_at(self, lam: complex) -> np.ndarray:
        """F(lambda) as a dense matrix."""
        lam = complex(lam)
        if on_ray(lam):
            raise DomainError(f"lambda must lie off [0, inf), got {lam}")
        diag = 1.0 / (lam - self.operator.multipliers)
        return (lam + self.a) * (self._left * diag[None, :]) @ self.operator.fourier

    def log_value(self, lam: complex) -> complex:
        return log_det_regularized(self.order, eigenvalues(self.operator_at(lam)))

    def value(self, lam: complex) -> complex:
        return det_regularized(self.order, eigenvalues(self.operator_at(lam)))

    def __call__(self, lam: complex) -> complex:
        return self.value(lam)


def default_shift(omega_data: OmegaData) -> float:
    return A_OVER_OMEGA * omega_data.omega


def f_lambda(
    grid: Grid,
    s: float,
    p: float,
    potential: Potential,
    a: Optional[float],
    lam: complex,
) -> complex:
    """det_{ceil p}(I - F(lambda)); a defaults to twice the omega of find_omega."""
    if potential.is_zero:
        return 1.0 + 0.0j
    if a is None:
        a = default_shift(find_omega(grid, s, p, potential))
    return PerturbationDeterminant(assemble_h(grid, s, potential), a, p).value(lam)


def argument_principle_count(
    determinant: PerturbationDeterminant,
    center: complex,
    radius: float,
    samples: int = 64,
) -> Winding:
    """Winding number of f along the circle |lambda - center| = radius."""
    center = complex(center)
    if not radius > 0.0:
        raise DomainError(f"contour radius must be positive, got {radius}")
    if dist_to_ray(center) <= radius:
        raise DomainError(f"contour of radius {radius} around {center} meets [0, inf)")
    angles = 2.0 * np.pi * np.arange(samples + 1) / samples
    values = np.array([determinant(center + radius * np.exp(1j * t)) for t in angles])
    if np.any(values == 0.0):
        raise DomainError("f vanishes on the contour")
    phase = np.unwrap(np.angle(values))
    raw = float((phase[-1] - phase[0]) / (2.0 * np.pi))
    return Winding(int(round(raw)), raw)


def log_f_chain_check(
    grid: Grid,
    s: float,
    p: float,
    potential: Potential,
    omega_data: OmegaData,
    a: float,
    lam: complex,
) -> dict:
    """log|f(lambda)| <= Gamma_p (C_omega/|omega - a|)^p |lambda + a|^p ||V (lambda - H0)^{-1}||_{S_p}^p.

    The middle term uses the measured ||(a+H)^{-1}|| in place of C_omega/|omega - a|.
    """
    op = assemble_h(grid, s, potential)
    determinant = PerturbationDeterminant(op, a, p)
    gamma = gamma_constant(determinant.order)
    log_abs = determinant.log_value(lam).real
    bs_lhs = schatten_norm(op.weighted_resolvent(lam), p) ** p
    shift = resolvent_shift_check(grid, s, potential, omega_data, a)
    scale = abs(complex(lam) + a) ** p
    measured = gamma * shift.lhs ** p * scale * bs_lhs
    rhs = gamma * shift.rhs ** p * scale * bs_lhs
    return {
        "lambda": [complex(lam).real, complex(lam).imag],
        "log_abs_f": log_abs,
        "measured": measured,
        "rhs": rhs,
        "holds": bool(log_abs <= measured * (1.0 + 1e-10) + 1e-12 and measured <= rhs * (1.0 + 1e-10)),
    }


def zeros_match_spectrum(determinant: PerturbationDeterminant, tol: float = 1e-6, eps: float = 1e-3) -> dict:
    """|f| at the certified eigenvalues of H farther than eps from [0, inf),
    relative to sup |f| on a reference circle.
    """
    spectrum = eig(determinant.operator.matrix)
    off_ray = [lam for lam in spectrum.eigenvalues if dist_to_ray(lam) > eps]
    if not off_ray:
        return {"eigenvalues": [], "relative": [], "holds": True}
    radius = 2.0 * max(abs(lam) for lam in off_ray) + 1.0
    reference = max(abs(determinant(radius * np.exp(1j * t))) for t in np.linspace(0.1, 2 * np.pi - 0.1, 16))
    relative = [abs(determinant(lam)) / reference for lam in off_ray]
    return {
        "eigenvalues": [[lam.real, lam.imag] for lam in off_ray],
        "relative": relative,
        "holds": all(r <= tol for r in relative),
    }
