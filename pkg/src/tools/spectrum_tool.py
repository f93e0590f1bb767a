from typing import Dict, Any

from src.operators.discretize import assemble_h
from src.operators.eigen import DISCRETE, classify_discrete, eig
from src.operators.grid import Grid
from src.operators.potentials import from_descriptor
from src.tools.base_tool import BaseTool
from src.utils.config import EIG_TOL


class SpectrumTool(BaseTool):
    """Classified eigenvalues of H = (-Delta)^s + V on the grid.

    Request keys: d, s, grid {n, length}, potential descriptor, optional eig_tol / classification_eps.
    """

    command = "spectrum"

    def __init__(self):
        super().__init__(
            name="spectrum",
            description="Classified eigenvalues of the discretized operator",
        )

    def run(self, request: Dict[str, Any]) -> Dict[str, Any]:
        grid = Grid(int(request["d"]), int(request["grid"]["n"]), float(request["grid"]["length"]))
        potential = from_descriptor(grid, request["potential"])
        spectrum = eig(assemble_h(grid, float(request["s"]), potential).matrix, tol=request.get("eig_tol", EIG_TOL))
        spectrum = classify_discrete(spectrum, request.get("classification_eps"))
        rows = spectrum.rows()
        return {
            "ok": True,
            "rows": rows,
            "hermitian": spectrum.hermitian,
            "discrete_count": sum(1 for r in rows if r["tag"] == DISCRETE),
            "max_residual": spectrum.max_residual,
        }
