import logging
import math
from typing import Dict, Any

from src.bgk.zeros import blaschke_family_ratios, end_to_end_envelope
from src.operators.discretize import find_omega
from src.tools.base_tool import BaseTool

logger = logging.getLogger(__name__)

# family-wide bound on bgk_sum / K_est accepted as "bounded"
RATIO_CEILING = 2.0


class BgkTool(BaseTool):
    """Blaschke-family ratio suite, plus the envelope inequality for g = f o phi_a when a job is given."""

    command = "bgk"

    def __init__(self):
        super().__init__(
            name="bgk",
            description="Zero sums against growth envelopes on the unit disc",
        )

    def run(self, request: Dict[str, Any]) -> Dict[str, Any]:
        kwargs = {"tau": float(request.get("tau", 0.5)), "seed": int(request.get("seed", 0))}
        if request.get("moduli"):
            kwargs["moduli"] = tuple(request["moduli"])
        if request.get("counts"):
            kwargs["counts"] = tuple(request["counts"])
        family = blaschke_family_ratios(**kwargs)
        ok = math.isfinite(family.max_ratio) and family.max_ratio <= RATIO_CEILING
        out = {"ok": ok, "family": family.to_dict()}
        job = request.get("job")
        if job is not None:
            _, grid, params, potential = job.build()
            omega_data = find_omega(grid, params.s, params.p, potential)
            envelope = end_to_end_envelope(grid, params.s, params.p, potential, omega_data)
            out["envelope"] = envelope
            out["ok"] = ok and envelope["holds"]
        logger.info(f"{'✅' if out['ok'] else '❌'} bgk: max family ratio {family.max_ratio:.4g}")
        return out
