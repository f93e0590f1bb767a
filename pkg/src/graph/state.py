# src/graph/state.py

from enum import Enum
from typing import Any, Dict
import uuid


class VerificationStage(Enum):
    STARTING = "starting"
    ASSEMBLED = "assembled"
    DECOMPOSED = "decomposed"
    CALIBRATED = "calibrated"
    CONSTANTS_READY = "constants_ready"
    SUMMED = "summed"
    FINISHED = "finished"
    ERROR = "error"


class VerificationState(dict):
    """State passed between the nodes of the verification graph.

    Required on entry: theorem, grid, params, potential.
    """

    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        self.setdefault("run_id", str(uuid.uuid4()))
        self.setdefault("stage", VerificationStage.STARTING.value)
        self.setdefault("timings", {})
        self.setdefault("margins", {})
        self.setdefault("error", None)


def record_error(state: Dict[str, Any], node: str, error: Exception) -> Dict[str, Any]:
    # plain-dict helper: the graph hands nodes a dict, not the subclass
    state["stage"] = VerificationStage.ERROR.value
    state["error"] = {"stage": node, "type": type(error).__name__, "message": str(error)}
    return state
