"""Dense eigendecomposition and singular values with residual certificates."""

import logging
from dataclasses import dataclass, replace
from typing import List, Optional

import numpy as np
from scipy import linalg

from src.conformal.maps import dist_to_ray
from src.utils.config import CLASSIFICATION_FLOOR, EIG_TOL, HERMITIAN_ATOL
from src.utils.errors import DomainError, PartialResultError

logger = logging.getLogger(__name__)

DISCRETE = "discrete-candidate"
ESSENTIAL = "essential-like"


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray
    residuals: np.ndarray
    tags: Optional[List[str]] = None
    hermitian: bool = False

    def __len__(self) -> int:
        return len(self.eigenvalues)

    @property
    def max_residual(self) -> float:
        return float(np.max(self.residuals)) if len(self.residuals) else 0.0

    def discrete_candidates(self) -> np.ndarray:
        if self.tags is None:
            raise ValueError("spectrum is not classified; call classify_discrete first")
        mask = np.array([t == DISCRETE for t in self.tags], dtype=bool)
        return self.eigenvalues[mask]

    def rows(self) -> List[dict]:
        tags = self.tags or [None] * len(self)
        return [
            {"re": float(lam.real), "im": float(lam.imag), "residual": float(res), "tag": tag}
            for lam, res, tag in zip(self.eigenvalues, self.residuals, tags)
        ]


def _as_square(matrix) -> np.ndarray:
    a = np.asarray(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"eig needs a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DomainError("matrix has non-finite entries")
    return a


def sort_order(values: np.ndarray) -> np.ndarray:
    """Indices sorting complex values by (Re, Im)."""
    return np.lexsort((values.imag, values.real))


def eig(matrix, tol: float = EIG_TOL) -> Spectrum:
    """All eigenvalues with residuals ||Av - lambda v|| / ||A||_F for unit v.

    Hermitian input goes through eigh and yields real eigenvalues. Raises
    PartialResultError when LAPACK fails or a residual exceeds tol.
    """
    a = _as_square(matrix)
    n = a.shape[0]
    if n == 0:
        return Spectrum(np.zeros(0, dtype=complex), np.zeros(0))
    hermitian = bool(linalg.ishermitian(a, atol=HERMITIAN_ATOL))
    try:
        if hermitian:
            values, vectors = linalg.eigh(a)
            values = values.astype(complex)
        else:
            values, vectors = linalg.eig(a)
    except linalg.LinAlgError as e:
        logger.error(f"❌ eigendecomposition of a {n}x{n} matrix failed: {e}")
        raise PartialResultError(f"eigendecomposition did not converge: {e}", uncertified=range(n)) from e

    order = sort_order(values)
    values, vectors = values[order], vectors[:, order]
    vectors = vectors / np.linalg.norm(vectors, axis=0, keepdims=True)
    scale = np.linalg.norm(a)
    if scale == 0.0:
        residuals = np.zeros(n)
    else:
        residuals = np.linalg.norm(a @ vectors - vectors * values, axis=0) / scale

    spectrum = Spectrum(values, residuals, hermitian=hermitian)
    uncertified = np.flatnonzero(residuals > tol)
    if len(uncertified):
        raise PartialResultError(
            f"{len(uncertified)} of {n} eigenvalues exceed residual tolerance {tol:g}",
            partial=spectrum,
            uncertified=uncertified.tolist(),
        )
    logger.debug(f"eig: n={n}, hermitian={hermitian}, max residual {spectrum.max_residual:.2e}")
    return spectrum


def eigenvalues(matrix, tol: float = EIG_TOL) -> np.ndarray:
    return eig(matrix, tol).eigenvalues


def svd(matrix) -> np.ndarray:
    """Singular values in descending order."""
    a = np.asarray(matrix, dtype=complex)
    if a.size == 0:
        return np.zeros(0)
    try:
        return linalg.svdvals(a)
    except linalg.LinAlgError as e:
        logger.error(f"❌ singular value decomposition failed: {e}")
        raise PartialResultError(f"singular value decomposition did not converge: {e}") from e


def classify_discrete(spectrum: Spectrum, eps: Optional[float] = None) -> Spectrum:
    """Tag eigenvalues farther than eps from [0, inf) as discrete candidates.

    Default eps = max(10 * max residual, configured floor).
    """
    if eps is None:
        eps = max(10.0 * spectrum.max_residual, CLASSIFICATION_FLOOR)
    if not eps > 0.0:
        raise DomainError(f"classification threshold must be positive, got eps={eps}")
    tags = [DISCRETE if dist_to_ray(lam) > eps else ESSENTIAL for lam in spectrum.eigenvalues]
    return replace(spectrum, tags=tags)
