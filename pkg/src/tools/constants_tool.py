import logging
from typing import Dict, Any

from src.lieb_thirring.constants import constants_bundle
from src.lieb_thirring.exponents import lt_comparison_exponent
from src.lieb_thirring.integration import a_integration_check, case_sample_points
from src.lieb_thirring.params import Theorem, parse_params
from src.operators.discretize import OmegaData
from src.tools.base_tool import BaseTool
from src.utils.config import QUAD_TOL
from src.utils.errors import DomainError

logger = logging.getLogger(__name__)


class ConstantsTool(BaseTool):
    """Prints the constant ledger of one bound, optionally with the per-case a-integration checks."""

    command = "constants"

    def __init__(self):
        super().__init__(
            name="constants",
            description="Evaluates exponents, integrals and K-constants of a bound",
        )

    def run(self, request: Dict[str, Any]) -> Dict[str, Any]:
        theorem = Theorem.parse(request["theorem"])
        params = parse_params(theorem, request["d"], request["s"], request["p"], request.get("tau"))
        omega = float(request.get("omega", 1.0))
        c_omega = float(request.get("c_omega", 1.0))
        if c_omega < 1.0:
            raise DomainError(f"C_omega must satisfy C_omega >= 1, got {c_omega}")
        omega_data = OmegaData(omega, c_omega, 1.0 - 1.0 / c_omega)
        bundle = constants_bundle(theorem, params, omega_data)
        out = {"ok": True, "bundle": bundle.to_dict()}
        if theorem is Theorem.T1:
            out["comparison_exponent"] = lt_comparison_exponent(params)
        if request.get("cases"):
            tol = request.get("quadrature_tol", QUAD_TOL)
            checks = [a_integration_check(theorem, point, 1.0, omega, tol) for point in case_sample_points(theorem)]
            out["a_integration"] = checks
            out["ok"] = all(c["holds"] for c in checks)
        logger.info(f"{'✅' if out['ok'] else '❌'} constants for {theorem.value} ({bundle.case.value})")
        return out
