"""
Self-test graph
LangGraph StateGraph running the verification stages in order, with an early exit on failure
"""
from typing import Any, Dict, Optional, Sequence

from langgraph.graph import END, START, StateGraph
from loguru import logger

from ..core.errors import InputError
from ..state.verification_state import VerificationState, create_initial_state
from ..versuite.stages import STAGE_ORDER, STAGES, finalize_stage


def _has_failure(state: VerificationState) -> bool:
    return any(not check["passed"] for check in state.get("checks", []))


def _route_to(following: str):
    """Next stage, or finalize when fail_fast is set and a check already failed"""

    def route(state: VerificationState) -> str:
        if state.get("fail_fast", False) and _has_failure(state):
            logger.warning(f"fail-fast: skipping from {state.get('current_stage')} to finalize")
            return "finalize"
        return following

    return route


def create_verification_graph(stages: Optional[Sequence[str]] = None):
    """
    Build the self-test graph

    Architecture:
    START → stage_1 → ... → stage_n → finalize → END
    Each stage may route straight to finalize when fail_fast is set and a check failed
    """
    stages = list(stages or STAGE_ORDER)
    unknown = [s for s in stages if s not in STAGES]
    if unknown:
        raise InputError(f"unknown self-test stages: {unknown}", known=list(STAGES))

    graph = StateGraph(VerificationState)

    # ===== Stage Nodes =====
    for name in stages:
        graph.add_node(name, STAGES[name])
    graph.add_node("finalize", finalize_stage)

    # ===== Edges =====
    graph.add_edge(START, stages[0])
    for current, following in zip(stages, stages[1:] + ["finalize"]):
        if following == "finalize":
            graph.add_edge(current, "finalize")
            continue
        graph.add_conditional_edges(current, _route_to(following), {following: following, "finalize": "finalize"})
    graph.add_edge("finalize", END)

    return graph.compile()


def run_selftest(quick: bool = False, fail_fast: bool = False, stages: Optional[Sequence[str]] = None) -> Dict[str, Any]:
    """Run the verification graph and return the final state"""
    stages = list(stages or STAGE_ORDER)
    graph = create_verification_graph(stages)
    initial_state = create_initial_state(stages, fail_fast=fail_fast, quick=quick)
    logger.info(f"selftest: stages={stages} quick={quick} fail_fast={fail_fast}")
    return graph.invoke(initial_state)
