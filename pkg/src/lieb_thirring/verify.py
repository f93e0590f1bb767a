"""End-to-end verification of the eigenvalue-sum bounds on a discretized operator."""

import logging
import math
from functools import lru_cache
from typing import List, Optional, Sequence

import numpy as np

from src.graph.state import VerificationState
from src.graph.verification_graph import create_verification_graph
from src.lieb_thirring.params import SpectralParams, Theorem
from src.lieb_thirring.report import VerificationReport
from src.operators.discretize import assemble_h
from src.operators.eigen import classify_discrete, eig
from src.operators.grid import Grid
from src.operators.potentials import Potential
from src.utils.config import EIG_TOL, FAMILY_DRIFT_FACTOR, FAMILY_SCALES, TAU_SWEEP
from src.utils.errors import DomainError

logger = logging.getLogger(__name__)

SELF_ADJOINT_TOL = 1e-8
SCALING_RTOL = 1e-12


@lru_cache(maxsize=1)
def verification_graph():
    return create_verification_graph()


def verify(
    theorem,
    grid: Grid,
    params: SpectralParams,
    potential: Potential,
    eig_tol: float = EIG_TOL,
    classification_eps: Optional[float] = None,
) -> VerificationReport:
    """Run the verification graph for one (theorem, grid, params, V) job.

    Failures inside the pipeline end up in `report.error`; nothing is raised for them.
    """
    theorem = Theorem.parse(theorem)
    if potential.grid != grid:
        raise DomainError(f"potential was sampled on {potential.grid}, not on {grid}")
    state = VerificationState(
        theorem=theorem,
        grid=grid,
        params=params,
        potential=potential,
        eig_tol=eig_tol,
        classification_eps=classification_eps,
    )
    logger.info(f"Verifying {theorem.value} for d={params.d}, s={params.s}, p={params.p}, tau={params.tau} on N={grid.n}")
    final_state = verification_graph().invoke(state)
    return final_state["report"]


def tau_sweep(
    theorem,
    grid: Grid,
    params: SpectralParams,
    potential: Potential,
    taus: Sequence[float] = TAU_SWEEP,
) -> List[VerificationReport]:
    return [verify(theorem, grid, params.with_tau(tau), potential) for tau in taus]


def potential_family(
    theorem,
    grid: Grid,
    params: SpectralParams,
    potential: Potential,
    scales: Sequence[float] = FAMILY_SCALES,
    drift_factor: float = FAMILY_DRIFT_FACTOR,
) -> dict:
    """verify() on c V for each scale c.

    Checks that rhs = explicit factor * c^p ||V||_p^p for every member, that the
    positive ratios drift by less than `drift_factor`, and (T2) that every verdict holds.
    """
    theorem = Theorem.parse(theorem)
    base_norm = potential.lp_norm(params.p)
    reports = [verify(theorem, grid, params, potential.scaled(c)) for c in scales]
    scaling_ok = True
    for c, report in zip(scales, reports):
        if report.rhs is None:
            scaling_ok = False
            continue
        expected = report.explicit_factor * (c * base_norm) ** params.p
        if not math.isclose(report.rhs, expected, rel_tol=SCALING_RTOL, abs_tol=0.0):
            scaling_ok = False
    ratios = [r.ratio for r in reports if r.ratio is not None and r.ratio > 0.0 and math.isfinite(r.ratio)]
    drift = max(ratios) / min(ratios) if ratios else 1.0
    all_ok = all(r.ok for r in reports)
    if theorem is Theorem.T2:
        all_ok = all_ok and all(r.verdict == "holds" for r in reports)
    logger.info(f"{'✅' if all_ok and drift < drift_factor else '❌'} family of {len(reports)}: drift {drift:.3g}")
    return {
        "theorem": theorem.value,
        "scales": list(scales),
        "ratios": [r.ratio for r in reports],
        "drift": drift,
        "drift_ok": drift < drift_factor,
        "rhs_scaling_ok": scaling_ok,
        "verdicts_ok": all_ok,
        "reports": reports,
    }


def self_adjoint_check(grid: Grid, s: float, potential: Potential, tol: float = SELF_ADJOINT_TOL) -> dict:
    """For real V every discrete candidate sits on the negative half-axis."""
    if not potential.is_real:
        raise DomainError("self_adjoint_check needs a real potential")
    spectrum = classify_discrete(eig(assemble_h(grid, s, potential).matrix))
    candidates = spectrum.discrete_candidates()
    max_imag = float(np.max(np.abs(candidates.imag))) if len(candidates) else 0.0
    max_real = float(np.max(candidates.real)) if len(candidates) else -math.inf
    holds = max_imag <= tol and max_real < 0.0
    logger.info(f"{'✅' if holds else '❌'} self-adjoint check: {len(candidates)} candidates, max |Im| {max_imag:.2e}")
    return {
        "candidates": len(candidates),
        "hermitian": spectrum.hermitian,
        "max_imag": max_imag,
        "max_real": max_real if len(candidates) else None,
        "holds": holds,
    }

