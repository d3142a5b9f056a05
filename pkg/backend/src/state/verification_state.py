"""
Verification state for the self-test graph
TypedDict state with reducer-accumulated checks, progress and errors
"""
from datetime import datetime, timezone
from typing import Annotated, Any, Dict, List, Optional, Sequence, TypedDict, TypeVar

Record = TypeVar("Record")


class CheckRecord(TypedDict):
    """Outcome of one self-test check"""
    stage: str
    name: str
    passed: bool
    detail: Dict[str, Any]
    elapsed_ms: int


def append_records(existing: Optional[List[Record]], new: Optional[List[Record]]) -> List[Record]:
    """Reducer function to accumulate records in stage order"""
    return list(existing or []) + list(new or [])


class VerificationState(TypedDict):
    """State threaded through kernel -> residues -> ... -> finalize"""

    # === Run Configuration ===
    stages: List[str]
    fail_fast: bool
    quick: bool

    # === Accumulated Results ===
    checks: Annotated[List[CheckRecord], append_records]
    progress: Annotated[List[Dict], append_records]
    errors: Annotated[List[str], append_records]

    # === Summary ===
    current_stage: str
    passed: Optional[bool]
    summary: Dict[str, Any]
    started_at: str


def create_initial_state(stages: Sequence[str], fail_fast: bool = False, quick: bool = False) -> Dict[str, Any]:
    """Create initial verification state with default values"""
    return {
        "stages": list(stages),
        "fail_fast": fail_fast,
        "quick": quick,
        "checks": [],
        "progress": [],
        "errors": [],
        "current_stage": "",
        "passed": None,
        "summary": {},
        "started_at": datetime.now(timezone.utc).isoformat(),
    }
