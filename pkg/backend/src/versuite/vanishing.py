"""
Vanishing of high-degree insertions on Quot schemes
Hypothesis gate followed by an exact VI evaluation
"""
from typing import Any, Dict, List, Optional

from loguru import logger
from pydantic import BaseModel, Field

from ..core.errors import HypothesisViolated, InputError
from ..polyseries.aclass import AClassPoly, weighted_degree
from ..quotvi.problem import build_problem, expected_dimension
from ..quotvi.vafa_intriligator import vi_evaluate


class VanishingVerdict(BaseModel):
    problem: Dict[str, Any]
    hypotheses: Dict[str, bool] = Field(description="Each hypothesis and whether it holds")
    value: str
    vanishes: bool


def vanishing_check(
    r: int, d: int, g: int, N: int, P: AClassPoly, S: Optional[AClassPoly] = None, threads: int = 1
) -> VanishingVerdict:
    """Checks deg P > r(r-1)gbar, deg P + deg S < N/r and M > 0, then evaluates exactly"""
    deg_p = weighted_degree(P)
    if deg_p.zero:
        raise InputError("P must be nonzero")
    deg_s = weighted_degree(S).value if S is not None else 0
    gbar = g - 1
    remainder = expected_dimension(r, d, g, N) - deg_p.value - deg_s
    hypotheses = {
        "deg P > r(r-1)gbar": deg_p.value > r * (r - 1) * gbar,
        "deg P + deg S < N/r": r * (deg_p.value + deg_s) < N,
        "M positive integer": remainder > 0 and remainder % r == 0,
    }
    failed: List[str] = [name for name, holds in hypotheses.items() if not holds]
    if failed:
        raise HypothesisViolated(f"hypotheses fail: {', '.join(failed)}", failed=failed)

    problem = build_problem(r, d, g, N, P, S)
    result = vi_evaluate(problem, threads=threads)
    verdict = VanishingVerdict(
        problem=problem.describe(), hypotheses=hypotheses, value=result.value, vanishes=result.rational == 0
    )
    if not verdict.vanishes:
        logger.error(f"expected vanishing but got {result.value} for {problem.describe()}")
    return verdict
