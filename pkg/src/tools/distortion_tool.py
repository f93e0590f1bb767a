from typing import Dict, Any

from src.conformal.suites import distortion_suite
from src.tools.base_tool import BaseTool


class DistortionTool(BaseTool):
    command = "distortion"

    def __init__(self):
        super().__init__(
            name="distortion",
            description="Runs the conformal-map distortion property suite",
        )

    def run(self, request: Dict[str, Any]) -> Dict[str, Any]:
        report = distortion_suite(
            float(request.get("a", 1.0)),
            samples=int(request.get("samples", 10_000)),
            seed=int(request.get("seed", 0)),
        )
        return {"ok": report.passed, "suite": report.to_dict()}
