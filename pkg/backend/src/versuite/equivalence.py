"""
Cross-method equivalence
VI sums against Quot-side residues over a grid, with every comparison recorded
"""
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import Any, Dict, List, Optional

from loguru import logger
from pydantic import BaseModel, Field

from ..core.errors import IntersectorError
from ..quotvi.validity import validity_check
from ..quotvi.vafa_intriligator import vi_evaluate
from ..residueengine.quot_residue import quot_residue
from .grid import GridCase, GridSpec, iter_cases


class ComparisonStatus(str, Enum):
    EQUAL = "equal"
    MISMATCH = "mismatch"
    RESIDUE_INAPPLICABLE = "residue-path-inapplicable"
    INADMISSIBLE = "inadmissible"
    ERROR = "error"


class ComparisonEntry(BaseModel):
    problem: Dict[str, Any]
    status: ComparisonStatus
    vi_value: Optional[str] = None
    residue_value: Optional[str] = None
    message: Optional[str] = None


class EquivalenceReport(BaseModel):
    entries: List[ComparisonEntry] = Field(default_factory=list)
    compared: int = Field(default=0, description="Cases where both methods ran")
    failures: int = Field(default=0, description="Mismatches plus errors")

    @property
    def passed(self) -> bool:
        return self.failures == 0


def compare_case(case: GridCase) -> ComparisonEntry:
    if case.problem is None:
        return ComparisonEntry(problem=case.describe(), status=ComparisonStatus.INADMISSIBLE, message=case.reason)
    problem = case.problem
    try:
        vi_value = vi_evaluate(problem).value
        report = validity_check(problem)
        if not report.valid:
            return ComparisonEntry(
                problem=problem.describe(),
                status=ComparisonStatus.RESIDUE_INAPPLICABLE,
                vi_value=vi_value,
                message="; ".join(report.reasons),
            )
        residue_value = quot_residue(problem).value
    except IntersectorError as exc:
        logger.error(f"comparison failed for {problem.describe()}: {exc.message}")
        return ComparisonEntry(problem=problem.describe(), status=ComparisonStatus.ERROR, message=exc.message)
    status = ComparisonStatus.EQUAL if vi_value == residue_value else ComparisonStatus.MISMATCH
    if status is ComparisonStatus.MISMATCH:
        logger.error(f"VI {vi_value} != residue {residue_value} for {problem.describe()}")
    return ComparisonEntry(
        problem=problem.describe(), status=status, vi_value=vi_value, residue_value=residue_value
    )


def equivalence_report(grid: GridSpec, threads: int = 1) -> EquivalenceReport:
    """vi_evaluate = quot_residue on every admissible, residue-valid grid point"""
    cases = list(iter_cases(grid))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            entries = list(executor.map(compare_case, cases))
    else:
        entries = [compare_case(case) for case in cases]
    compared = sum(1 for e in entries if e.status in (ComparisonStatus.EQUAL, ComparisonStatus.MISMATCH))
    failures = sum(1 for e in entries if e.status in (ComparisonStatus.MISMATCH, ComparisonStatus.ERROR))
    if compared == 0:
        logger.warning("equivalence grid produced no case valid for the residue path")
    logger.info(f"equivalence: {len(entries)} cases, {compared} compared, {failures} failures")
    return EquivalenceReport(entries=entries, compared=compared, failures=failures)
