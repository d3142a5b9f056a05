"""
Error hierarchy for the intersector engines
Every error knows its CLI exit code and renders itself as a JSON-ready dict
"""
from typing import Any, Dict


class IntersectorError(Exception):
    """Base class for every engine error"""

    exit_code = 2

    def __init__(self, message: str = "", **details: Any):
        super().__init__(message or self.__class__.__name__)
        self.message = message or self.__class__.__name__
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"error": self.__class__.__name__, "message": self.message}
        for key, value in self.details.items():
            payload[key] = value if isinstance(value, (int, bool, list, dict)) or value is None else str(value)
        return payload


# ===== Input errors (exit code 2) =====

class InputError(IntersectorError):
    """Malformed or out-of-contract input"""


class OutOfRange(InputError, ValueError):
    """A numeric parameter lies outside its admissible range"""


class NotCoprime(InputError):
    """gcd(r, d) != 1"""


class DegreeMismatch(InputError):
    """Degree bookkeeping deg P + deg S + rM = e has no admissible solution"""


class HypothesisViolated(InputError):
    """A hypothesis of the vanishing statement does not hold"""


class WrongVariableOrder(InputError):
    """Residue requested in a variable that is not innermost"""


class ZeroForm(InputError, ZeroDivisionError):
    """Reciprocal of the zero form"""


class DivisionByZero(InputError, ZeroDivisionError):
    """Inverse of zero in an exact field"""


class OrderMismatch(InputError):
    """Cyclotomic arithmetic between elements of different order"""


class PolynomialFormatError(InputError):
    """Polynomial JSON document does not follow the file format"""


class InsufficientPoints(InputError):
    """Not enough sample points for the requested extraction"""


class ConvergenceNotGuaranteed(InputError):
    """Witten summand decays too slowly for a certified tail"""


class ResiduePathInvalid(InputError):
    """The Quot-side residue formula does not apply to this problem"""


# ===== Verification failures (exit code 1) =====

class VerificationFailure(IntersectorError):
    """An engine produced a result that violates a mathematical invariant"""

    exit_code = 1


class NotRational(VerificationFailure):
    """Cyclotomic element has nonzero nonconstant coefficients"""


class NonIntegerResult(VerificationFailure):
    """A quantity that must be an integer is not"""


class NonPositiveDimension(VerificationFailure):
    """Weyl dimension formula produced a non-positive or fractional value"""


class TruncationUnstable(VerificationFailure):
    """Residue differs between truncation bound T and T + margin"""


class PrecisionExhausted(VerificationFailure):
    """Imaginary residue of a real quantity exceeds the precision tolerance"""
