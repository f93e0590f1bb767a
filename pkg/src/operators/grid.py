from dataclasses import dataclass
from functools import cached_property

import numpy as np

from src.utils.config import BOX_TO_SUPPORT_RATIO, GRID_CAP
from src.utils.errors import DomainError, ResourceError


@dataclass(frozen=True)
class Grid:
    """Periodic box [-L/2, L/2)^d sampled with N points per axis.

    Flattened indices run over the axes in 'ij' order, matching the Kronecker
    product of the one-dimensional transforms.
    """

    d: int
    n: int
    length: float

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 1:
            raise DomainError(f"grid dimension must be a positive integer, got d={self.d}")
        if self.n < 4 or self.n & (self.n - 1):
            raise DomainError(f"points per axis must be a power of two >= 4, got N={self.n}")
        if not self.length > 0.0:
            raise DomainError(f"box side must be positive, got L={self.length}")
        if self.size > GRID_CAP:
            raise ResourceError(f"grid of {self.n}^{self.d} = {self.size} points exceeds the cap {GRID_CAP}")

    @property
    def size(self) -> int:
        return self.n ** self.d

    @property
    def spacing(self) -> float:
        return self.length / self.n

    @property
    def cell_volume(self) -> float:
        return self.spacing ** self.d

    @cached_property
    def axis(self) -> np.ndarray:
        return -0.5 * self.length + self.spacing * np.arange(self.n)

    @cached_property
    def positions(self) -> np.ndarray:
        """(N^d, d) array of sample points."""
        mesh = np.meshgrid(*([self.axis] * self.d), indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=-1)

    @cached_property
    def frequencies(self) -> np.ndarray:
        """(N^d, d) integer lattice frequencies in DFT order; -N/2 is the Nyquist representative."""
        k = np.fft.fftfreq(self.n, d=1.0 / self.n)
        mesh = np.meshgrid(*([k] * self.d), indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=-1)

    def to_dict(self) -> dict:
        return {"d": self.d, "n": self.n, "length": self.length}


def box_for_support(width: float, ratio: float = BOX_TO_SUPPORT_RATIO) -> float:
    """Default box side for a potential of support radius `width`."""
    return ratio * width
