"""
Canonical problem fingerprints
SHA-256 over a sorted-key orjson dump of method, parameters and polynomial data
"""
import hashlib
from fractions import Fraction
from typing import Any, Mapping, Optional

import orjson


def _canonical(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Mapping):
        return {str(k): _canonical(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_canonical(v) for v in value]
    if hasattr(value, "canonical_terms"):
        return value.canonical_terms()
    return value


def problem_fingerprint(method: str, params: Mapping[str, Any], polys: Optional[Mapping[str, Any]] = None) -> str:
    """Hash identifying a computation independently of argument order"""
    document = {
        "method": method,
        "params": _canonical(params),
        "polys": _canonical(polys or {}),
    }
    return hashlib.sha256(orjson.dumps(document, option=orjson.OPT_SORT_KEYS)).hexdigest()
