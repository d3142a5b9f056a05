"""
Rational helpers
fractions.Fraction is the engine's exact scalar; this module owns its text form
"""
from fractions import Fraction
from typing import Union

from ..core.errors import InputError, NonIntegerResult

RationalLike = Union[Fraction, int, str]


def parse_rational(text: RationalLike) -> Fraction:
    """Parse "p/q", "-p/q" or "p" into a reduced Fraction"""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise InputError(f"expected a rational string, got {type(text).__name__}", value=repr(text))
    cleaned = text.strip()
    if not cleaned or any(ch in cleaned for ch in ".eE"):
        raise InputError(f"not a canonical rational: {text!r}", value=text)
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a canonical rational: {text!r}", value=text) from exc


def format_rational(value: Fraction) -> str:
    """Canonical serialization: "p/q" with q > 0, or "p" when q = 1"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def require_integer(value: Fraction, what: str = "value") -> int:
    """Return value as int, raising NonIntegerResult when it has a denominator"""
    value = Fraction(value)
    if value.denominator != 1:
        raise NonIntegerResult(f"{what} is not an integer: {format_rational(value)}", value=format_rational(value))
    return value.numerator
