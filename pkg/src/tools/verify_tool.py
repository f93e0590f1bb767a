import logging
from typing import Dict, Any

from src.lieb_thirring.integration import a_integration_check
from src.lieb_thirring.verify import potential_family, tau_sweep, verify
from src.tools.base_tool import BaseTool
from src.utils.config import QUAD_TOL
from src.utils.errors import ToolkitError

logger = logging.getLogger(__name__)

MODES = ("single", "family", "tau_sweep")


class VerifyTool(BaseTool):
    """Runs the verification pipeline for one job (or a family / tau sweep built from it)."""

    command = "verify"

    def __init__(self):
        super().__init__(
            name="verify",
            description="Checks an eigenvalue-sum bound on a discretized fractional Schroedinger operator",
        )

    def run(self, request: Dict[str, Any]) -> Dict[str, Any]:
        """
        CONTRACT: every return path sets 'ok'; a single job always carries a 'report'.
        """
        job = request["job"]
        mode = request.get("mode", "single")
        if mode not in MODES:
            raise ValueError(f"unknown verify mode {mode!r}; expected one of {MODES}")
        theorem, grid, params, potential = job.build()
        logger.info(f"Running verify ({mode}) for job {job.label}")

        if mode == "family":
            family = potential_family(theorem, grid, params, potential)
            reports = [r.to_dict() for r in family.pop("reports")]
            ok = family["drift_ok"] and family["rhs_scaling_ok"] and family["verdicts_ok"]
            return {"ok": ok, "family": family, "reports": reports}
        if mode == "tau_sweep":
            reports = tau_sweep(theorem, grid, params, potential)
            return {"ok": all(r.ok for r in reports), "reports": [r.to_dict() for r in reports]}

        report = verify(
            theorem, grid, params, potential,
            eig_tol=job.tolerances.eigen_residual,
            classification_eps=job.tolerances.classification_eps,
        )
        if report.error is None and report.omega is not None:
            try:
                check = a_integration_check(
                    theorem, params, lam_abs=1.0, omega=report.omega,
                    tol=request.get("quadrature_tol", QUAD_TOL),
                )
                report.margins["a_integration_ratio"] = check["ratio"]
            except ToolkitError as e:
                logger.warning(f"❌ a-integration cross-check skipped: {e}")
        return {"ok": report.ok, "verdict": report.verdict, "report": report.to_dict()}
