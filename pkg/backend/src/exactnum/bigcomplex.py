"""
High-precision complex values
Thin immutable wrapper over mpmath numbers that remembers the working precision
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath

from ..core.errors import OutOfRange

MIN_PRECISION = 64


def check_precision(precision: int) -> int:
    if precision < MIN_PRECISION:
        raise OutOfRange(f"precision must be at least {MIN_PRECISION} bits, got {precision}", precision=precision)
    return precision


def mpf_from_fraction(value: Fraction) -> mpmath.mpf:
    """Round a Fraction at the current working precision"""
    value = Fraction(value)
    return mpmath.mpf(value.numerator) / value.denominator


@dataclass(frozen=True)
class BigComplex:
    """Complex number with re, im as mpmath floats and the precision used"""

    re: mpmath.mpf
    im: mpmath.mpf
    precision: int

    @classmethod
    def from_value(cls, value: Union[mpmath.mpc, mpmath.mpf, int, Fraction], precision: int) -> "BigComplex":
        with mpmath.workprec(check_precision(precision)):
            if isinstance(value, Fraction):
                value = mpf_from_fraction(value)
            number = mpmath.mpc(value)
            return cls(number.real, number.imag, precision)

    @property
    def value(self) -> mpmath.mpc:
        with mpmath.workprec(self.precision):
            return mpmath.mpc(self.re, self.im)

    def _combine(self, other: "BigComplex", op) -> "BigComplex":
        precision = min(self.precision, other.precision)
        with mpmath.workprec(precision):
            result = op(mpmath.mpc(self.re, self.im), mpmath.mpc(other.re, other.im))
            return BigComplex(result.real, result.imag, precision)

    def __add__(self, other: "BigComplex") -> "BigComplex":
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: "BigComplex") -> "BigComplex":
        return self._combine(other, lambda a, b: a - b)

    def __mul__(self, other: "BigComplex") -> "BigComplex":
        return self._combine(other, lambda a, b: a * b)

    def __abs__(self) -> mpmath.mpf:
        with mpmath.workprec(self.precision):
            return mpmath.fabs(mpmath.mpc(self.re, self.im))

    def distance(self, other: Union["BigComplex", Fraction, int]) -> mpmath.mpf:
        """|self - other|, with exact rationals rounded at this precision"""
        if not isinstance(other, BigComplex):
            other = BigComplex.from_value(Fraction(other), self.precision)
        return abs(self - other)
