import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np
from scipy.stats import qmc

from src.resolvent.bounds import (
    bound_name,
    bound_negative_axis,
    resolvent_bound,
    resolvent_lp_direct,
)
from src.utils.config import QUAD_TOL
from src.utils.errors import ConvergenceError

logger = logging.getLogger(__name__)

CONJUGATE_RTOL = 1e-10
# arguments stay this far (in radians) from the positive axis
ARG_MARGIN = 0.05


@dataclass
class DominanceReport:
    d: int
    s: float
    p: float
    bound_name: str
    samples: int
    violations: Dict[str, int] = field(default_factory=dict)
    max_ratio: float = 0.0
    quadrature_failures: int = 0
    rows: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.quadrature_failures == 0 and all(v == 0 for v in self.violations.values())

    def to_dict(self, include_rows: bool = False) -> dict:
        out = {
            "d": self.d,
            "s": self.s,
            "p": self.p,
            "bound": self.bound_name,
            "samples": self.samples,
            "violations": dict(self.violations),
            "max_ratio": self.max_ratio,
            "quadrature_failures": self.quadrature_failures,
            "passed": self.passed,
        }
        if include_rows:
            out["rows"] = list(self.rows)
        return out


def spectral_samples(samples: int, seed: int, decades=(-2.0, 2.0)) -> np.ndarray:
    """Quasi-random lambda off the ray, all four quadrants, modulus 10^lo .. 10^hi."""
    unit = qmc.Halton(d=2, scramble=True, seed=seed).random(samples)
    lo, hi = decades
    modulus = 10.0 ** (lo + (hi - lo) * unit[:, 0])
    angle = ARG_MARGIN + (2.0 * math.pi - 2.0 * ARG_MARGIN) * unit[:, 1]
    return modulus * np.exp(1j * angle)


def dominance_suite(
    d: int,
    s: float,
    p: float,
    samples: int = 200,
    seed: int = 0,
    tol: float = QUAD_TOL,
) -> DominanceReport:
    """Direct norm against the closed-form bound on quasi-random lambda.

    Also checks conjugation symmetry, the negative-axis refinement, and that the
    norm decreases along lambda = -t.
    """
    name = bound_name(d, s)
    logger.info(f"Dominance suite: d={d}, s={s}, p={p}, bound={name}, samples={samples}")
    report = DominanceReport(d=d, s=s, p=p, bound_name=name, samples=samples)
    violations = {"dominance": 0, "conjugation": 0, "negative_axis": 0, "monotone": 0}

    for lam in spectral_samples(samples, seed):
        lam = complex(lam)
        try:
            direct = resolvent_lp_direct(d, s, p, lam, tol=tol)
            mirrored = resolvent_lp_direct(d, s, p, lam.conjugate(), tol=tol)
        except ConvergenceError as e:
            logger.warning(f"❌ quadrature failed at lambda={lam}: {e}")
            report.quadrature_failures += 1
            continue
        bound = resolvent_bound(d, s, p, lam)
        ratio = direct / bound
        report.max_ratio = max(report.max_ratio, ratio)
        if not direct < bound:
            violations["dominance"] += 1
        if abs(direct - mirrored) > CONJUGATE_RTOL * abs(direct):
            violations["conjugation"] += 1
        if lam.real < 0.0 and direct > bound_negative_axis(d, s, p, lam) * (1.0 + CONJUGATE_RTOL):
            violations["negative_axis"] += 1
        report.rows.append({"lambda": [lam.real, lam.imag], "direct": direct, "bound": bound, "ratio": ratio})

    along_axis = [resolvent_lp_direct(d, s, p, -t, tol=tol) for t in np.logspace(-2, 2, 25)]
    violations["monotone"] = int(np.sum(np.diff(along_axis) >= 0.0))

    report.violations = violations
    if report.passed:
        logger.info(f"✅ Dominance suite {name}: max ratio {report.max_ratio:.4g}")
    else:
        logger.warning(f"❌ Dominance suite {name}: {violations}, quadrature failures {report.quadrature_failures}")
    return report
