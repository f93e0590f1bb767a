import logging
import os
import threading
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Dict, Any, List, Optional

from tqdm import tqdm

from src.cli.config_schema import JobSpec, RunConfig
from src.cli.reports import content_hash, report_filename, write_json
from src.tools import BgkTool, ConstantsTool, DistortionTool, ResolventTool, SpectrumTool, VerifyTool
from src.tools.base_tool import BaseTool
from src.utils.config import OUTPUT_DIR
from src.utils.errors import ToolkitError
from src.utils.run_tracker import RunTracker

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"


class SuiteRunner:
    """Routes toolkit requests to the first tool that accepts them and runs batch configs."""

    def __init__(self, tools: Optional[List[BaseTool]] = None):
        self.tools = tools or [
            VerifyTool(),
            ConstantsTool(),
            ResolventTool(),
            DistortionTool(),
            BgkTool(),
            SpectrumTool(),
        ]
        # one lock per output directory serializes report writing
        self._locks: Dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def route(self, request: Dict[str, Any]) -> BaseTool:
        for tool in self.tools:
            if tool.can_handle(request):
                logger.debug(f"Selected tool: {tool.__class__.__name__}")
                return tool
        raise ValueError(f"no tool handles command {request.get('command')!r}")

    def process(self, request: Dict[str, Any]) -> Dict[str, Any]:
        """
        CONTRACT: every return path sets 'ok'; ToolkitErrors become {'ok': False, 'error': ...}.
        """
        tool = self.route(request)
        try:
            return tool.run(request)
        except ToolkitError as e:
            logger.error(f"❌ {tool.name} failed: {e}")
            return {"ok": False, "error": {"type": type(e).__name__, "message": str(e)}}

    def _lock_for(self, directory: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks.setdefault(os.path.abspath(directory), threading.Lock())

    def _run_job(self, index: int, job: JobSpec, config: RunConfig, output_dir: str, tracker: RunTracker):
        start = time.perf_counter()
        request = {"command": "verify", "job": job, "quadrature_tol": config.quadrature_tol}
        try:
            result = self.process(request)
        except Exception as e:
            logger.error(f"❌ job {job.label} crashed: {e}")
            result = {"ok": False, "error": {"type": type(e).__name__, "message": str(e)}}
        wall_time = time.perf_counter() - start

        report = result.get("report")
        if report is None:
            # failure before the pipeline produced a report: persist what is known
            report = {
                "theorem": job.theorem,
                "params": {"d": job.d, "s": job.s, "p": job.p, "tau": job.tau},
                "grid": {"d": job.d, **job.grid.model_dump()},
                "potential": job.potential.model_dump(mode="json"),
                "verdict": None,
                "error": result.get("error"),
            }
        path = os.path.join(output_dir, report_filename(index, job.label))
        with self._lock_for(output_dir):
            write_json(path, report)
        error = report.get("error")
        tracker.log_job(
            index,
            job.label,
            status="ok" if error is None else "error",
            verdict=report.get("verdict"),
            wall_time=wall_time,
            report_path=os.path.relpath(path, output_dir),
            report_hash=content_hash(report),
            error=None if error is None else error.get("message"),
        )

    def run_config(self, config: RunConfig, output_dir: Optional[str] = None, progress: bool = True) -> Dict[str, Any]:
        """Run every job of the config on a bounded worker pool; write reports and the manifest."""
        output_dir = output_dir or config.output_dir or OUTPUT_DIR
        os.makedirs(output_dir, exist_ok=True)
        tracker = RunTracker(config_hash=content_hash(config.canonical()))
        logger.info(f"Running {len(config.jobs)} job(s) with {config.workers} worker(s) into {output_dir}")

        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            futures = [
                pool.submit(self._run_job, index, job, config, output_dir, tracker)
                for index, job in enumerate(config.jobs)
            ]
            for future in tqdm(as_completed(futures), total=len(futures), desc="jobs", disable=not progress):
                future.result()

        manifest = tracker.manifest()
        with self._lock_for(output_dir):
            write_json(os.path.join(output_dir, MANIFEST_NAME), manifest)
        logger.info(f"✅ Run finished: {manifest['counts']}")
        return manifest


def exit_code(manifest: Dict[str, Any]) -> int:
    """0 when every job holds or passes as property-only, 1 otherwise."""
    for job in manifest["jobs"]:
        if job["status"] != "ok" or job["verdict"] not in ("holds", "property-only"):
            return 1
    return 0
