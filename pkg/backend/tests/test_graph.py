"""
Test cases for the self-test graph
Stage routing, fail-fast exits and the final summary
"""
from datetime import datetime, timedelta
from typing import get_type_hints

import pytest

from src.core.errors import InputError
from src.graph import create_verification_graph, run_selftest
from src.state import VerificationState, append_records, create_initial_state
from src.versuite.stages import STAGE_ORDER, finalize_stage, koszul_oracle


def failing_stage(state):
    return {
        "checks": [{"stage": "kernel", "name": "always-fails", "passed": False, "detail": {}, "elapsed_ms": 0}],
        "errors": ["kernel/always-fails"],
        "current_stage": "kernel",
        "progress": [],
    }


class TestGraphConstruction:
    """Test suite for graph wiring"""

    def test_full_graph_compiles(self):
        graph = create_verification_graph()
        assert graph is not None

    def test_unknown_stage_rejected(self):
        with pytest.raises(InputError):
            create_verification_graph(["kernel", "astrology"])

    def test_initial_state(self):
        state = create_initial_state(["kernel"], fail_fast=True, quick=True)
        assert state["stages"] == ["kernel"]
        assert state["fail_fast"] is True
        assert state["checks"] == [] and state["errors"] == []
        assert state["passed"] is None

    def test_started_at_is_utc(self):
        started = datetime.fromisoformat(create_initial_state(["kernel"])["started_at"])
        assert started.utcoffset() == timedelta(0)

    def test_one_reducer_for_every_accumulated_list(self):
        hints = get_type_hints(VerificationState, include_extras=True)
        assert {name: hints[name].__metadata__ for name in ("checks", "progress", "errors")} == {
            "checks": (append_records,),
            "progress": (append_records,),
            "errors": (append_records,),
        }

    def test_append_records(self):
        existing = [{"stage": "kernel"}]
        assert append_records(existing, [{"stage": "residues"}]) == [{"stage": "kernel"}, {"stage": "residues"}]
        assert append_records(None, ["kernel/a"]) == ["kernel/a"]
        assert append_records(["kernel/a"], None) == ["kernel/a"]
        assert append_records(None, None) == []
        assert existing == [{"stage": "kernel"}]

    def test_stage_order(self):
        assert STAGE_ORDER[0] == "kernel"
        assert STAGE_ORDER[-1] == "vanishing"


class TestRouting:
    """Test suite for stage execution and fail-fast"""

    def test_residues_only(self):
        state = run_selftest(quick=True, stages=["residues"])
        assert state["passed"] is True
        assert {c["stage"] for c in state["checks"]} == {"residues"}
        assert state["summary"]["failed"] == []

    def test_fail_fast_skips_later_stages(self, mocker):
        mocker.patch.dict("src.versuite.stages.STAGES", {"kernel": failing_stage})
        state = run_selftest(quick=True, fail_fast=True, stages=["kernel", "residues"])
        assert state["passed"] is False
        assert state["summary"]["skipped_stages"] == ["residues"]
        assert state["summary"]["failed"] == ["kernel/always-fails"]

    def test_without_fail_fast_later_stages_run(self, mocker):
        mocker.patch.dict("src.versuite.stages.STAGES", {"kernel": failing_stage})
        state = run_selftest(quick=True, fail_fast=False, stages=["kernel", "residues"])
        assert state["passed"] is False
        assert state["summary"]["skipped_stages"] == []
        assert any(c["stage"] == "residues" for c in state["checks"])

    def test_quick_selftest_passes(self):
        state = run_selftest(quick=True)
        assert state["summary"]["failed"] == []
        assert state["passed"] is True
        assert state["summary"]["skipped_stages"] == []


class TestStageHelpers:
    """Test suite for finalize and the level oracle"""

    def test_finalize_counts(self):
        state = {
            "stages": ["kernel", "residues"],
            "checks": [
                {"stage": "kernel", "name": "a", "passed": True, "detail": {}, "elapsed_ms": 1},
                {"stage": "kernel", "name": "b", "passed": False, "detail": {}, "elapsed_ms": 1},
            ],
        }
        update = finalize_stage(state)
        assert update["passed"] is False
        assert update["summary"]["total"] == 2
        assert update["summary"]["passed"] == 1
        assert update["summary"]["failed"] == ["kernel/b"]
        assert update["summary"]["skipped_stages"] == ["residues"]

    def test_finalize_with_no_checks_fails(self):
        assert finalize_stage({"stages": [], "checks": []})["passed"] is False

    def test_koszul_oracle(self):
        assert [koszul_oracle(s) for s in range(3)] == [1, 6, 19]
