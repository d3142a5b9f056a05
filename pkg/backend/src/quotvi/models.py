"""
Result models for Quot-scheme evaluations
pydantic models shared by the VI, residue and moduli engines and by the CLI
"""
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List

from pydantic import BaseModel, Field

from ..exactnum.rational import format_rational, parse_rational


class EvalMethod(str, Enum):
    """How a value was obtained"""
    VI_EXACT = "vi-exact"
    VI_NUMERIC = "vi-numeric"
    QUOT_RESIDUE = "quot-residue"
    MODULI_RESIDUE = "moduli-residue"
    VERLINDE_RESIDUE = "verlinde-residue"
    VERLINDE_MAPCOUNT = "verlinde-mapcount"


class EvalResult(BaseModel):
    """Exact value of one computation"""
    value: str = Field(description="Canonical rational p/q")
    method: EvalMethod = Field(description="Engine that produced the value")
    fingerprint: str = Field(description="Canonical hash of method, parameters and polynomial data")
    elapsed_ms: int = Field(default=0, description="Wall-clock milliseconds")

    @classmethod
    def exact(cls, value: Fraction, method: EvalMethod, fingerprint: str, elapsed_ms: int = 0) -> "EvalResult":
        return cls(value=format_rational(value), method=method, fingerprint=fingerprint, elapsed_ms=elapsed_ms)

    @property
    def rational(self) -> Fraction:
        return parse_rational(self.value)

    def to_output(self) -> Dict[str, Any]:
        return self.model_dump(mode="json")


class RegularityCertificate(BaseModel):
    """Degree count for the one-form in y_k at 0 and at infinity"""
    variable: int = Field(description="Index k of the residue variable y_k")
    order_at_zero: int = Field(description="m_k + min block degree of the numerator - pole order of R")
    growth_at_infinity: int = Field(description="m_k + max block degree of the numerator - degree of R's denominator")
    regular_at_zero: bool = Field(description="order_at_zero >= 1")
    regular_at_infinity: bool = Field(description="growth_at_infinity <= N - 1")


class ValidityReport(BaseModel):
    """Applicability of the Quot-side residue path"""
    valid: bool
    m: List[int] = Field(description="Reduced exponents m_1..m_{r-1}")
    certificates: List[RegularityCertificate] = Field(default_factory=list)
    reasons: List[str] = Field(default_factory=list, description="Why the residue path is rejected")
