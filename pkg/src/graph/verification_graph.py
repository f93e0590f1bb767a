# src/graph/verification_graph.py

import logging
import time
from functools import wraps
from typing import Any, Callable, Dict

from langgraph.graph import StateGraph, END

from src.graph.state import VerificationStage, record_error
from src.graph.transitions import continue_or_finalize
from src.lieb_thirring.constants import constants_bundle
from src.lieb_thirring.params import Theorem, check_admissible
from src.lieb_thirring.report import VerificationReport, complex_pair, decide_verdict, ratio_of
from src.lieb_thirring.sums import lt_sum
from src.operators.discretize import assemble_h, find_omega
from src.operators.eigen import classify_discrete, eig
from src.utils.config import EIG_TOL
from src.utils.errors import PartialResultError, ToolkitError

logger = logging.getLogger(__name__)

NODES = (
    "assemble_operator",
    "decompose_spectrum",
    "calibrate_omega",
    "collect_constants",
    "sum_eigenvalues",
)

Node = Callable[[Dict[str, Any]], Dict[str, Any]]


def _stage(name: str, stage: VerificationStage) -> Callable[[Node], Node]:
    """Time the node, mark the stage on success and record ToolkitErrors instead of raising."""

    def decorate(fn: Node) -> Node:
        @wraps(fn)
        def node(state: Dict[str, Any]) -> Dict[str, Any]:
            start = time.perf_counter()
            try:
                fn(state)
                state["stage"] = stage.value
                logger.debug(f"✅ {name}")
            except ToolkitError as e:
                logger.error(f"❌ {name} failed: {e}")
                record_error(state, name, e)
            finally:
                state.setdefault("timings", {})[name] = time.perf_counter() - start
            return state

        return node

    return decorate


@_stage("assemble_operator", VerificationStage.ASSEMBLED)
def assemble_operator(state: Dict[str, Any]):
    params = state["params"]
    check_admissible(state["theorem"], params)
    state["operator"] = assemble_h(state["grid"], params.s, state["potential"])
    state["v_norm_p"] = state["potential"].lp_norm(params.p)


@_stage("decompose_spectrum", VerificationStage.DECOMPOSED)
def decompose_spectrum(state: Dict[str, Any]):
    try:
        spectrum = eig(state["operator"].matrix, tol=state.get("eig_tol", EIG_TOL))
    except PartialResultError as e:
        if e.partial is not None:
            state["spectrum"] = classify_discrete(e.partial, state.get("classification_eps"))
        raise
    spectrum = classify_discrete(spectrum, state.get("classification_eps"))
    state["spectrum"] = spectrum
    state["margins"]["max_residual"] = spectrum.max_residual


@_stage("calibrate_omega", VerificationStage.CALIBRATED)
def calibrate_omega(state: Dict[str, Any]):
    params = state["params"]
    omega_data = find_omega(state["grid"], params.s, params.p, state["potential"])
    state["omega_data"] = omega_data
    state["margins"]["eta"] = omega_data.eta


@_stage("collect_constants", VerificationStage.CONSTANTS_READY)
def collect_constants(state: Dict[str, Any]):
    state["bundle"] = constants_bundle(state["theorem"], state["params"], state["omega_data"])


@_stage("sum_eigenvalues", VerificationStage.SUMMED)
def sum_eigenvalues(state: Dict[str, Any]):
    candidates = state["spectrum"].discrete_candidates()
    state["lt_sum"] = lt_sum(candidates, state["bundle"].exponents)


def finalize_report(state: Dict[str, Any]) -> Dict[str, Any]:
    """Build the report from whatever the earlier nodes left in the state."""
    theorem = Theorem.parse(state["theorem"]).value
    report = VerificationReport(
        theorem=theorem,
        params=state["params"].to_dict(),
        grid=state["grid"].to_dict(),
        potential=state["potential"].descriptor(),
        timings=dict(state.get("timings", {})),
        margins=dict(state.get("margins", {})),
        error=state.get("error"),
        v_norm_p=state.get("v_norm_p"),
    )
    spectrum = state.get("spectrum")
    if spectrum is not None:
        report.eigenvalue_count = len(spectrum)
        if spectrum.tags is not None:
            candidates = spectrum.discrete_candidates()
            report.discrete_count = len(candidates)
            report.candidates = [complex_pair(lam) for lam in candidates]
    omega_data = state.get("omega_data")
    if omega_data is not None:
        report.omega = omega_data.omega
        report.c_omega = omega_data.c_omega
    bundle = state.get("bundle")
    if bundle is not None:
        report.case = bundle.case.value
        report.constants = bundle.to_dict()
        report.explicit_factor = bundle.explicit_factor
    summed = state.get("lt_sum")
    if summed is not None and bundle is not None and report.error is None:
        report.lhs = summed.value
        report.excluded = summed.excluded
        report.rhs = bundle.rhs(report.v_norm_p)
        report.ratio = ratio_of(report.lhs, report.rhs)
        report.verdict = decide_verdict(theorem, report.lhs, report.rhs)
        report.margins["rhs_minus_lhs"] = report.rhs - report.lhs
    state["report"] = report
    state["stage"] = VerificationStage.FINISHED.value if report.error is None else VerificationStage.ERROR.value
    marker = "✅" if report.error is None else "❌"
    logger.info(f"{marker} {theorem} verification finished: verdict={report.verdict}, ratio={report.ratio}")
    return state


def create_verification_graph():
    """assemble_operator -> decompose_spectrum -> calibrate_omega -> collect_constants
    -> sum_eigenvalues -> finalize_report, short-circuiting to finalize_report on error."""
    builder = StateGraph(dict)

    builder.add_node("assemble_operator", assemble_operator)
    builder.add_node("decompose_spectrum", decompose_spectrum)
    builder.add_node("calibrate_omega", calibrate_omega)
    builder.add_node("collect_constants", collect_constants)
    builder.add_node("sum_eigenvalues", sum_eigenvalues)
    builder.add_node("finalize_report", finalize_report)

    for current, following in zip(NODES, NODES[1:]):
        builder.add_conditional_edges(
            current,
            continue_or_finalize(following),
            {following: following, "finalize_report": "finalize_report"},
        )
    builder.add_edge(NODES[-1], "finalize_report")
    builder.add_edge("finalize_report", END)

    builder.set_entry_point("assemble_operator")

    return builder.compile()
