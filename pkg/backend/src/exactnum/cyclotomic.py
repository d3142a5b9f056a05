"""
Cyclotomic field arithmetic
Elements of Q(zeta_N) stored as canonical residues modulo the N-th cyclotomic polynomial
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Any, Dict, Sequence, Tuple, Union

import mpmath
from sympy import QQ, Poly, Symbol, cyclotomic_poly, totient
from sympy.polys.polyerrors import NotInvertible

from ..core.errors import DivisionByZero, InputError, NotRational, OrderMismatch, OutOfRange
from .bigcomplex import BigComplex, check_precision, mpf_from_fraction
from .rational import format_rational, parse_rational

_X = Symbol("x")

Scalar = Union[Fraction, int]


# ===== Cyclotomic polynomials and reduction tables =====

@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first"""
    return tuple(int(c) for c in reversed(_modulus(n).all_coeffs()))


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise OutOfRange(f"cyclotomic order must be positive, got {n}", order=n)
    return int(totient(n))


@lru_cache(maxsize=None)
def _modulus(n: int) -> Poly:
    if n < 1:
        raise OutOfRange(f"cyclotomic order must be positive, got {n}", order=n)
    return cyclotomic_poly(n, _X, polys=True).set_domain(QQ)


def _to_poly(coeffs: Sequence[Scalar]) -> Poly:
    """Poly over QQ from coefficients listed lowest degree first"""
    values = [Fraction(c) for c in coeffs] or [Fraction(0)]
    return Poly.from_list([QQ(c.numerator, c.denominator) for c in reversed(values)], _X, domain=QQ)


def _from_poly(poly: Poly, n: int) -> Tuple[Fraction, ...]:
    """Remainder of poly modulo Phi_n as a coefficient tuple of length phi(n)"""
    remainder = poly.rem(_modulus(n))
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(remainder.all_coeffs())]
    degree = euler_phi(n)
    return tuple(coeffs[:degree] + [Fraction(0)] * max(degree - len(coeffs), 0))


def _reduce(coeffs: Sequence[Scalar], n: int) -> Tuple[Fraction, ...]:
    return _from_poly(_to_poly(coeffs), n)


@lru_cache(maxsize=None)
def _zeta_table(n: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """Reduced forms of x^k for k in [0, n)"""
    return tuple(_from_poly(Poly.from_list([QQ(1)] + [QQ(0)] * k, _X, domain=QQ), n) for k in range(n))


# ===== CycloNum =====

@dataclass(frozen=True)
class CycloNum:
    """Element of Q(zeta_N); coeffs has length phi(N) and represents sum c_i zeta^i"""

    order: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != euler_phi(self.order):
            raise InputError(
                f"CycloNum of order {self.order} needs {euler_phi(self.order)} coefficients, got {len(self.coeffs)}"
            )

    # ----- constructors -----

    @classmethod
    def from_polynomial(cls, order: int, coeffs: Sequence[Scalar]) -> "CycloNum":
        return cls(order, _reduce([Fraction(c) for c in coeffs], order))

    @classmethod
    def from_rational(cls, order: int, value: Scalar) -> "CycloNum":
        return cls.from_polynomial(order, [Fraction(value)])

    @classmethod
    def zero(cls, order: int) -> "CycloNum":
        return cls.from_rational(order, 0)

    @classmethod
    def one(cls, order: int) -> "CycloNum":
        return cls.from_rational(order, 1)

    @classmethod
    def zeta_power(cls, order: int, k: int) -> "CycloNum":
        return cls(order, _zeta_table(order)[k % order])

    @classmethod
    def from_exponent_table(cls, order: int, table: Sequence[Scalar]) -> "CycloNum":
        """Reduce sum_k table[k] * zeta^k, with k read modulo order"""
        powers = _zeta_table(order)
        acc = [Fraction(0)] * euler_phi(order)
        for k, c in enumerate(table):
            if not c:
                continue
            row = powers[k % order]
            for i, v in enumerate(row):
                if v:
                    acc[i] += c * v
        return cls(order, tuple(acc))

    # ----- predicates -----

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    # ----- arithmetic -----

    def _coerce(self, other: Any) -> "CycloNum":
        if isinstance(other, CycloNum):
            if other.order != self.order:
                raise OrderMismatch(
                    f"cannot combine orders {self.order} and {other.order}", left=self.order, right=other.order
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CycloNum.from_rational(self.order, other)
        return NotImplemented

    def __add__(self, other: Any) -> "CycloNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloNum(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycloNum":
        return CycloNum(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: Any) -> "CycloNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloNum(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other: Any) -> "CycloNum":
        return (-self) + other

    def __mul__(self, other: Any) -> "CycloNum":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CycloNum(self.order, tuple(c * other for c in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloNum(self.order, _from_poly(_to_poly(self.coeffs) * _to_poly(other.coeffs), self.order))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        """Inverse of the representative modulo Phi_N"""
        if self.is_zero():
            raise DivisionByZero(f"inverse of zero in Q(zeta_{self.order})", order=self.order)
        try:
            inverse = _to_poly(self.coeffs).invert(_modulus(self.order))
        except NotInvertible as exc:
            raise DivisionByZero(f"element shares a factor with Phi_{self.order}", order=self.order) from exc
        return CycloNum(self.order, _from_poly(inverse, self.order))

    def __truediv__(self, other: Any) -> "CycloNum":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise DivisionByZero("division by rational zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, exponent: int) -> "CycloNum":
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = CycloNum.one(self.order)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def galois_conjugate(self, k: int) -> "CycloNum":
        """Image under the automorphism zeta -> zeta^k, gcd(k, N) = 1"""
        if gcd(k, self.order) != 1:
            raise OutOfRange(f"zeta -> zeta^{k} is not an automorphism of Q(zeta_{self.order})", k=k)
        table = [Fraction(0)] * self.order
        for i, c in enumerate(self.coeffs):
            table[(i * k) % self.order] += c
        return CycloNum.from_exponent_table(self.order, table)

    # ----- conversions -----

    def to_rational(self) -> Fraction:
        for degree, c in enumerate(self.coeffs[1:], start=1):
            if c != 0:
                raise NotRational(
                    f"coefficient of zeta^{degree} is {format_rational(c)}",
                    order=self.order,
                    degree=degree,
                    coefficient=format_rational(c),
                )
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def to_json(self) -> Dict[str, Any]:
        return {"order": self.order, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, document: Dict[str, Any]) -> "CycloNum":
        try:
            return cls(int(document["order"]), tuple(parse_rational(c) for c in document["coeffs"]))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed CycloNum document: {exc}") from exc


def cyclo_inverse(a: CycloNum) -> CycloNum:
    return a.inverse()


def cyclo_to_rational(a: CycloNum) -> Fraction:
    return a.to_rational()


def complex_eval(a: CycloNum, precision: int = 128) -> BigComplex:
    """Evaluate the representative polynomial at exp(2 pi i / N)"""
    check_precision(precision)
    with mpmath.workprec(precision + 16):
        zeta = mpmath.expjpi(mpmath.mpf(2) / a.order)
        acc = mpmath.mpc(0)
        for c in reversed(a.coeffs):
            acc = acc * zeta + mpf_from_fraction(c)
    return BigComplex.from_value(acc, precision)
