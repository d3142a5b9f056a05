from .verification_graph import create_verification_graph, run_selftest

__all__ = ["create_verification_graph", "run_selftest"]
