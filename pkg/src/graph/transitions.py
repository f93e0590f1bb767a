# src/graph/transitions.py

from typing import Any, Callable, Dict

from src.graph.state import VerificationStage


def has_error(state: Dict[str, Any]) -> bool:
    return state.get("stage") == VerificationStage.ERROR.value


def continue_or_finalize(next_node: str) -> Callable[[Dict[str, Any]], str]:
    """Routing function: go on to `next_node` unless a node recorded an error."""

    def route(state: Dict[str, Any]) -> str:
        if has_error(state):
            return "finalize_report"
        return next_node

    route.__name__ = f"route_to_{next_node}"
    return route
