from .verification_state import CheckRecord, VerificationState, append_records, create_initial_state

__all__ = ["CheckRecord", "VerificationState", "append_records", "create_initial_state"]
