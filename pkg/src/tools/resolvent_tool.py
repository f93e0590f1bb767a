import logging
from typing import Dict, Any

from src.resolvent.bounds import check_dominance, resolvent_constants
from src.resolvent.suites import dominance_suite
from src.tools.base_tool import BaseTool
from src.utils.config import QUAD_TOL

logger = logging.getLogger(__name__)


class ResolventTool(BaseTool):
    """Direct L^p norm of the free resolvent kernel against its closed-form bound.

    With a `lambda` the check runs at that point, otherwise the sampled dominance suite runs.
    """

    command = "resolvent"

    def __init__(self):
        super().__init__(
            name="resolvent",
            description="Compares the resolvent-kernel L^p norm with the BR / BR1 bounds",
        )

    def run(self, request: Dict[str, Any]) -> Dict[str, Any]:
        d, s, p = int(request["d"]), float(request["s"]), float(request["p"])
        tol = request.get("quadrature_tol", QUAD_TOL)
        constants = resolvent_constants(d, s, p).to_dict()
        lam = request.get("lambda")
        if lam is not None:
            row = check_dominance(d, s, p, complex(lam), tol=tol)
            ok = row["holds"] and row.get("negative_axis_holds", True)
            return {"ok": ok, "check": row, "constants": constants}
        report = dominance_suite(d, s, p, samples=int(request.get("samples", 200)), seed=int(request.get("seed", 0)), tol=tol)
        return {"ok": report.passed, "suite": report.to_dict(), "constants": constants}
