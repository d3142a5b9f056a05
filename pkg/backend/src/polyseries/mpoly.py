"""
Exact multivariate polynomials
Elements of sympy's sparse ring QQ[x1..xn], exposed through Fraction term tables
"""
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import QQ, symbols
from sympy.polys.rings import PolyElement, PolyRing, ring

from ..core.errors import InputError, OutOfRange
from ..exactnum.rational import format_rational

Exponent = Tuple[int, ...]
Scalar = Union[Fraction, int]


@lru_cache(maxsize=None)
def polynomial_ring(n: int) -> PolyRing:
    """QQ[x1..xn], shared by every MPoly with n variables"""
    if n < 1:
        raise OutOfRange(f"variable count must be positive, got {n}")
    return ring(symbols(f"x1:{n + 1}", seq=True), QQ)[0]


def to_qq(value: Scalar) -> Any:
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


class MPoly:
    """Polynomial in n variables with rational coefficients; no zero coefficients stored"""

    __slots__ = ("n", "element", "_terms", "_hash")

    def __init__(self, n: int, terms: Optional[Mapping[Exponent, Scalar]] = None):
        cleaned: Dict[Exponent, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise InputError(f"exponent vector {exps} does not have length {n}")
            if any(e < 0 for e in exps):
                raise InputError(f"negative exponent in polynomial term {exps}")
            cleaned[exps] = cleaned.get(exps, Fraction(0)) + Fraction(coeff)
        self._assign(n, polynomial_ring(n).from_dict({e: to_qq(c) for e, c in cleaned.items() if c}))

    def _assign(self, n: int, element: PolyElement) -> None:
        self.n = n
        self.element = element
        self._terms: Optional[Dict[Exponent, Fraction]] = None
        self._hash: Optional[int] = None

    # ----- constructors -----

    @classmethod
    def wrap(cls, n: int, element: PolyElement) -> "MPoly":
        poly = cls.__new__(cls)
        poly._assign(n, element)
        return poly

    @classmethod
    def zero(cls, n: int) -> "MPoly":
        return cls.wrap(n, polynomial_ring(n).zero)

    @classmethod
    def constant(cls, n: int, value: Scalar) -> "MPoly":
        return cls.wrap(n, polynomial_ring(n).ground_new(to_qq(value)))

    @classmethod
    def variable(cls, n: int, index: int) -> "MPoly":
        if not 0 <= index < n:
            raise OutOfRange(f"variable index {index} out of range for {n} variables")
        return cls.wrap(n, polynomial_ring(n).gens[index])

    @classmethod
    def linear(cls, coefficients: Sequence[Scalar]) -> "MPoly":
        n = len(coefficients)
        return cls(n, {tuple(int(i == k) for k in range(n)): c for i, c in enumerate(coefficients)})

    def _with(self, element: PolyElement) -> "MPoly":
        return MPoly.wrap(self.n, element)

    # ----- inspection -----

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        if self._terms is None:
            self._terms = {tuple(m): from_qq(c) for m, c in self.element.items()}
        return self._terms

    def is_zero(self) -> bool:
        return not self.element

    def is_constant(self) -> bool:
        return self.element.is_ground

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.n, Fraction(0))

    def total_degree(self) -> int:
        if self.is_zero():
            raise InputError("total degree of the zero polynomial is undefined")
        return max(sum(e) for e in self.terms)

    def block_degrees(self, indices: Iterable[int]) -> Tuple[int, int]:
        """(min, max) over terms of the total degree restricted to the given variables"""
        if self.is_zero():
            raise InputError("block degree of the zero polynomial is undefined")
        indices = list(indices)
        degrees = [sum(e[i] for i in indices) for e in self.terms]
        return min(degrees), max(degrees)

    def homogeneous_components(self) -> Dict[int, "MPoly"]:
        parts: Dict[int, Dict[Exponent, Any]] = {}
        for exps, c in self.element.items():
            parts.setdefault(sum(exps), {})[exps] = c
        ring_ = self.element.ring
        return {deg: self._with(ring_.from_dict(terms)) for deg, terms in sorted(parts.items())}

    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(sorted(self.terms.items()))

    def canonical_terms(self) -> List[List[Any]]:
        return [[list(exps), format_rational(c)] for exps, c in sorted(self.terms.items())]

    # ----- arithmetic -----

    def _lift(self, other: Any) -> "MPoly":
        if isinstance(other, MPoly):
            if other.n != self.n:
                raise InputError(f"variable count mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MPoly.constant(self.n, other)
        return NotImplemented

    def __add__(self, other: Any) -> "MPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self._with(self.element + other.element)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return self._with(-self.element)

    def __sub__(self, other: Any) -> "MPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self._with(self.element - other.element)

    def __rsub__(self, other: Any) -> "MPoly":
        return (-self) + other

    def __mul__(self, other: Any) -> "MPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._with(self.element.mul_ground(to_qq(other)))
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.multiply(other)

    __rmul__ = __mul__

    def multiply(self, other: "MPoly", max_degree: Optional[int] = None) -> "MPoly":
        """Product, optionally dropping terms of total degree above max_degree"""
        other = self._lift(other)
        if max_degree is None:
            return self._with(self.element * other.element)
        product = self.truncate(max_degree).element * other.truncate(max_degree).element
        return self._with(product).truncate(max_degree)

    def power(self, exponent: int, max_degree: Optional[int] = None) -> "MPoly":
        if exponent < 0:
            raise OutOfRange(f"negative polynomial power {exponent}")
        if max_degree is None:
            return self._with(self.element ** exponent)
        result = MPoly.constant(self.n, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result.multiply(base, max_degree)
            exponent >>= 1
            if exponent:
                base = base.multiply(base, max_degree)
        return result

    def __pow__(self, exponent: int) -> "MPoly":
        return self.power(exponent)

    def truncate(self, max_degree: int) -> "MPoly":
        if all(sum(m) <= max_degree for m in self.element.keys()):
            return self
        kept = {m: c for m, c in self.element.items() if sum(m) <= max_degree}
        return self._with(self.element.ring.from_dict(kept))

    # ----- substitution and evaluation -----

    def substitute(self, images: Sequence["MPoly"], max_degree: Optional[int] = None) -> "MPoly":
        """Replace variable i by images[i]; all images share one variable count"""
        if len(images) != self.n:
            raise InputError(f"need {self.n} images for substitution, got {len(images)}")
        m = images[0].n
        cache: Dict[Tuple[int, int], MPoly] = {}

        def image_power(i: int, e: int) -> MPoly:
            if (i, e) not in cache:
                cache[(i, e)] = images[i].power(e, max_degree)
            return cache[(i, e)]

        result = MPoly.zero(m)
        for exps, c in self.terms.items():
            term = MPoly.constant(m, c)
            for i, e in enumerate(exps):
                if e:
                    term = term.multiply(image_power(i, e), max_degree)
            result = result + term
        return result

    def permute(self, permutation: Sequence[int]) -> "MPoly":
        """Variable i becomes variable permutation[i]"""
        moved_terms = {}
        for exps, c in self.element.items():
            moved = [0] * self.n
            for i, e in enumerate(exps):
                moved[permutation[i]] = e
            moved_terms[tuple(moved)] = c
        return self._with(self.element.ring.from_dict(moved_terms))

    def evaluate(self, values: Sequence[Any], convert: Callable[[Fraction], Any] = lambda c: c) -> Any:
        """Evaluate at values; convert maps coefficients into the value ring"""
        total = None
        for exps, c in self.items():
            term = convert(c)
            for v, e in zip(values, exps):
                if e:
                    term = term * (v ** e)
            total = term if total is None else total + term
        return total if total is not None else convert(Fraction(0))

    # ----- protocol -----

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = MPoly.constant(self.n, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.n == other.n and self.element == other.element

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, tuple(sorted(self.terms.items()))))
        return self._hash

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for exps, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}" for i, e in enumerate(exps) if e)
            parts.append(f"{format_rational(c)}*{mono}" if mono else format_rational(c))
        return " + ".join(parts)
