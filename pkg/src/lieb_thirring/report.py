import math
from dataclasses import dataclass, field
from typing import List, Optional

from src.utils.config import SCHEMA_VERSION, TOOLKIT_VERSION

HOLDS = "holds"
VIOLATED = "violated"
PROPERTY_ONLY = "property-only"
VERDICTS = (HOLDS, VIOLATED, PROPERTY_ONLY)


def complex_pair(value: complex) -> List[float]:
    value = complex(value)
    return [value.real, value.imag]


def finite_or_none(value: Optional[float]) -> Optional[float]:
    if value is None or not math.isfinite(value):
        return None
    return float(value)


@dataclass
class VerificationReport:
    """Outcome of one verification job.

    verdict is None when the pipeline stopped early; `error` then names the stage.
    For T1/T1b `rhs` is only the explicit part of the bound.
    """

    theorem: str
    params: dict
    grid: dict
    potential: dict
    case: Optional[str] = None
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    explicit_factor: Optional[float] = None
    ratio: Optional[float] = None
    verdict: Optional[str] = None
    eigenvalue_count: int = 0
    discrete_count: int = 0
    excluded: int = 0
    omega: Optional[float] = None
    c_omega: Optional[float] = None
    v_norm_p: Optional[float] = None
    candidates: List[List[float]] = field(default_factory=list)
    constants: dict = field(default_factory=dict)
    margins: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)
    error: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.error is None and self.verdict in (HOLDS, PROPERTY_ONLY)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "toolkit_version": TOOLKIT_VERSION,
            "theorem": self.theorem,
            "case": self.case,
            "params": dict(self.params),
            "grid": dict(self.grid),
            "potential": dict(self.potential),
            "lhs": finite_or_none(self.lhs),
            "rhs": finite_or_none(self.rhs),
            "explicit_factor": finite_or_none(self.explicit_factor),
            "ratio": finite_or_none(self.ratio),
            "verdict": self.verdict,
            "eigenvalue_count": self.eigenvalue_count,
            "discrete_count": self.discrete_count,
            "excluded": self.excluded,
            "omega": self.omega,
            "c_omega": self.c_omega,
            "v_norm_p": self.v_norm_p,
            "candidates": [list(c) for c in self.candidates],
            "constants": dict(self.constants),
            "margins": dict(self.margins),
            "timings": dict(self.timings),
            "error": self.error,
        }


def decide_verdict(theorem: str, lhs: float, rhs: float) -> str:
    """T2 is explicit end to end; T1/T1b carry a non-explicit factor and are property-only."""
    if lhs == 0.0:
        return HOLDS
    if theorem == "T2":
        return HOLDS if lhs <= rhs else VIOLATED
    return PROPERTY_ONLY


def ratio_of(lhs: float, rhs: float) -> float:
    if rhs > 0.0:
        return lhs / rhs
    return 0.0 if lhs == 0.0 else math.inf
