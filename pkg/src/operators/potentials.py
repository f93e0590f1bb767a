"""Complex potentials sampled on a periodic grid.

Every potential is generated from a descriptor (kind, amplitude, width, center,
seed, bandwidth) so that a report can rebuild the exact samples it was run on.
"""

import logging
from dataclasses import dataclass, field, replace
from itertools import product
from typing import Optional, Sequence, Tuple

import numpy as np

from src.operators.grid import Grid
from src.utils.errors import DomainError

logger = logging.getLogger(__name__)

KINDS = ("gaussian", "box", "random-bandlimited", "constant")


@dataclass(frozen=True)
class Potential:
    grid: Grid
    values: np.ndarray = field(repr=False, compare=False)
    kind: str
    amplitude: complex
    width: float = 1.0
    center: Tuple[float, ...] = ()
    seed: Optional[int] = None
    bandwidth: int = 4

    @property
    def is_real(self) -> bool:
        return bool(np.all(self.values.imag == 0.0))

    @property
    def is_zero(self) -> bool:
        return not np.any(self.values)

    def lp_norm(self, p: float) -> float:
        """((L/N)^d sum_x |V(x)|^p)^{1/p}; p = inf gives the sup norm."""
        if np.isinf(p):
            return float(np.max(np.abs(self.values)))
        if p < 1.0:
            raise DomainError(f"lp_norm needs p >= 1, got p={p}")
        return float((self.grid.cell_volume * np.sum(np.abs(self.values) ** p)) ** (1.0 / p))

    def scaled(self, factor: complex) -> "Potential":
        return replace(self, values=self.values * factor, amplitude=self.amplitude * factor)

    def descriptor(self) -> dict:
        out = {
            "kind": self.kind,
            "amplitude": [float(np.real(self.amplitude)), float(np.imag(self.amplitude))],
            "width": self.width,
            "center": list(self.center),
        }
        if self.kind == "random-bandlimited":
            out["seed"] = self.seed
            out["bandwidth"] = self.bandwidth
        return out


def _center(grid: Grid, center: Optional[Sequence[float]]) -> np.ndarray:
    if center is None or len(center) == 0:
        return np.zeros(grid.d)
    if len(center) != grid.d:
        raise DomainError(f"center has {len(center)} coordinates, grid has d={grid.d}")
    return np.asarray(center, dtype=float)


def _check_width(width: float):
    if not width > 0.0:
        raise DomainError(f"potential width must be positive, got w={width}")


def gaussian(grid: Grid, amplitude: complex, width: float, center=None) -> Potential:
    """A exp(-|x-c|^2 / w^2)."""
    _check_width(width)
    c = _center(grid, center)
    r2 = np.sum((grid.positions - c) ** 2, axis=1)
    values = complex(amplitude) * np.exp(-r2 / width ** 2)
    return Potential(grid, values, "gaussian", complex(amplitude), width, tuple(c))


def box(grid: Grid, amplitude: complex, width: float, center=None) -> Potential:
    """A on the cube max_i |x_i - c_i| <= w, zero elsewhere."""
    _check_width(width)
    c = _center(grid, center)
    inside = np.max(np.abs(grid.positions - c), axis=1) <= width
    values = np.where(inside, complex(amplitude), 0.0 + 0.0j)
    return Potential(grid, values, "box", complex(amplitude), width, tuple(c))


def constant(grid: Grid, amplitude: complex) -> Potential:
    values = np.full(grid.size, complex(amplitude), dtype=complex)
    return Potential(grid, values, "constant", complex(amplitude))


def random_bandlimited(
    grid: Grid,
    amplitude: complex,
    width: float,
    seed: int,
    bandwidth: int = 4,
    center=None,
) -> Potential:
    """Seeded complex field with integer modes |k| <= bandwidth on the scale w,
    normalized to sup 1 before the Gaussian envelope exp(-|x-c|^2 / w^2) and the amplitude.
    """
    _check_width(width)
    if seed is None or int(seed) < 0:
        raise DomainError("random-bandlimited potentials need an unsigned integer seed")
    if bandwidth < 0:
        raise DomainError(f"bandwidth must be >= 0, got {bandwidth}")
    c = _center(grid, center)
    modes = np.array(
        [k for k in product(range(-bandwidth, bandwidth + 1), repeat=grid.d) if np.dot(k, k) <= bandwidth ** 2],
        dtype=float,
    )
    rng = np.random.default_rng(int(seed))
    coeffs = rng.standard_normal(len(modes)) + 1j * rng.standard_normal(len(modes))
    shifted = (grid.positions - c) / width
    field_values = np.exp(1j * shifted @ modes.T) @ coeffs
    peak = np.max(np.abs(field_values))
    if peak > 0.0:
        field_values = field_values / peak
    envelope = np.exp(-np.sum(shifted ** 2, axis=1))
    values = complex(amplitude) * field_values * envelope
    return Potential(grid, values, "random-bandlimited", complex(amplitude), width, tuple(c), int(seed), bandwidth)


def from_descriptor(grid: Grid, descriptor: dict) -> Potential:
    """Rebuild a potential from its serialized descriptor."""
    kind = descriptor.get("kind")
    logger.debug(f"Building {kind} potential on {grid.n}^{grid.d} grid")
    raw = descriptor.get("amplitude", [1.0, 0.0])
    amplitude = complex(raw[0], raw[1]) if isinstance(raw, (list, tuple)) else complex(raw)
    width = float(descriptor.get("width", 1.0))
    center = descriptor.get("center") or None
    if kind == "gaussian":
        return gaussian(grid, amplitude, width, center)
    if kind == "box":
        return box(grid, amplitude, width, center)
    if kind == "constant":
        return constant(grid, amplitude)
    if kind == "random-bandlimited":
        return random_bandlimited(
            grid, amplitude, width,
            seed=descriptor.get("seed"),
            bandwidth=int(descriptor.get("bandwidth", 4)),
            center=center,
        )
    raise DomainError(f"unknown potential kind {kind!r}; expected one of {KINDS}")


def zero(grid: Grid) -> Potential:
    return constant(grid, 0.0)
