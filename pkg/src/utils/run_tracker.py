import threading
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from src.utils.config import SCHEMA_VERSION, TOOLKIT_VERSION


@dataclass
class JobRecord:
    index: int
    label: str
    status: str
    verdict: Optional[str]
    wall_time: float
    report_path: Optional[str] = None
    report_hash: Optional[str] = None
    error: Optional[str] = None


@dataclass
class RunTracker:
    config_hash: str
    records: List[JobRecord] = field(default_factory=list)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def log_job(
        self,
        index: int,
        label: str,
        status: str,
        verdict: Optional[str],
        wall_time: float,
        report_path: Optional[str] = None,
        report_hash: Optional[str] = None,
        error: Optional[str] = None,
    ) -> JobRecord:
        record = JobRecord(index, label, status, verdict, wall_time, report_path, report_hash, error)
        with self._lock:
            self.records.append(record)
        return record

    def total_wall_time(self) -> float:
        return sum(r.wall_time for r in self.records)

    def counts(self) -> Dict[str, int]:
        out: Dict[str, int] = {}
        for r in self.records:
            key = r.verdict or r.status
            out[key] = out.get(key, 0) + 1
        return out

    def summary(self) -> List[Dict]:
        return [
            {
                "index": r.index,
                "job": r.label,
                "status": r.status,
                "verdict": r.verdict,
                "wall_time_s": round(r.wall_time, 3),
                "report": r.report_path,
                "report_hash": r.report_hash,
                "error": r.error,
            }
            for r in sorted(self.records, key=lambda r: r.index)
        ]

    def manifest(self) -> Dict:
        return {
            "toolkit_version": TOOLKIT_VERSION,
            "schema_version": SCHEMA_VERSION,
            "config_hash": self.config_hash,
            "counts": self.counts(),
            "jobs": self.summary(),
            "timings": {"total_wall_time_s": round(self.total_wall_time(), 3)},
        }
