from dataclasses import asdict, dataclass
from enum import Enum
from typing import Optional

from src.utils.config import TAU_DEFAULT
from src.utils.errors import DomainError


class Theorem(str, Enum):
    """Which eigenvalue-sum bound is checked.

    T1: 0 < s <= d/2; T1b: s > d/2; T2: any s > 0 (the resolvent-comparison route).
    """

    T1 = "T1"
    T1b = "T1b"
    T2 = "T2"

    @classmethod
    def parse(cls, value) -> "Theorem":
        if isinstance(value, cls):
            return value
        for member in cls:
            if str(value).lower() == member.value.lower():
                return member
        raise DomainError(f"unknown theorem {value!r}; expected one of {[m.value for m in cls]}")


@dataclass(frozen=True)
class SpectralParams:
    d: int
    s: float
    p: float
    tau: float = TAU_DEFAULT

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 1:
            raise DomainError(f"d must be a positive integer, got d={self.d}")
        if not self.s > 0.0:
            raise DomainError(f"s must be positive, got s={self.s}")
        if not self.p >= 1.0:
            raise DomainError(f"p must satisfy p >= 1, got p={self.p}")
        if not self.tau > 0.0:
            raise DomainError(f"tau must be positive, got tau={self.tau}")

    @property
    def half_ratio(self) -> float:
        """d/2s."""
        return self.d / (2.0 * self.s)

    @property
    def ratio(self) -> float:
        """d/s."""
        return self.d / self.s

    def with_tau(self, tau: float) -> "SpectralParams":
        return SpectralParams(self.d, self.s, self.p, tau)

    def to_dict(self) -> dict:
        return asdict(self)


def check_admissible(theorem: Theorem, params: SpectralParams):
    """Raise DomainError naming the violated hypothesis of the theorem."""
    theorem = Theorem.parse(theorem)
    d, s, p = params.d, params.s, params.p
    if theorem is Theorem.T1:
        if s > d / 2.0:
            raise DomainError(f"T1 needs 0 < s <= d/2, got s={s}, d={d} (use T1b)")
        if not p > params.half_ratio:
            raise DomainError(f"T1 needs p > d/2s = {params.half_ratio:g}, got p={p}")
    elif theorem is Theorem.T1b:
        if not s > d / 2.0:
            raise DomainError(f"T1b needs s > d/2, got s={s}, d={d} (use T1)")
        if not p > 1.0:
            raise DomainError(f"T1b needs p > 1, got p={p}")
    else:
        if not p > max(1.0, params.half_ratio):
            raise DomainError(f"T2 needs p > max(1, d/2s) = {max(1.0, params.half_ratio):g}, got p={p}")


def parse_params(theorem, d: int, s: float, p: float, tau: Optional[float] = None) -> SpectralParams:
    params = SpectralParams(d, s, p, TAU_DEFAULT if tau is None else tau)
    check_admissible(theorem, params)
    return params
