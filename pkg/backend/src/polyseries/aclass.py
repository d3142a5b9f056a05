"""
Polynomials in the tautological classes
Normalized classes a-bar_2..a-bar_r or plain classes a_1..a_r, with weight i on the i-th class
"""
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

import orjson

from ..core.errors import InputError, OutOfRange, PolynomialFormatError
from ..exactnum.rational import format_rational, parse_rational

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class WeightedDegree:
    """Weighted degree of a class polynomial; the zero polynomial carries zero=True"""

    value: int = 0
    zero: bool = False

    def __int__(self) -> int:
        if self.zero:
            raise InputError("weighted degree of the zero polynomial has no value")
        return self.value


class AClassPoly:
    """Polynomial in a-bar_2..a-bar_r (normalized) or a_1..a_r (plain)"""

    __slots__ = ("rank", "normalized", "terms", "_hash")

    def __init__(self, rank: int, terms: Optional[Mapping[Exponent, Any]] = None, normalized: bool = True):
        if rank < 2:
            raise OutOfRange(f"rank must be at least 2, got {rank}", rank=rank)
        self.rank = rank
        self.normalized = normalized
        size = self.variable_count
        cleaned: Dict[Exponent, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != size:
                raise InputError(f"exponent vector {exps} needs {size} entries for rank {rank}")
            if any(e < 0 for e in exps):
                raise InputError(f"negative exponent {exps}")
            coeff = Fraction(coeff)
            total = cleaned.get(exps, Fraction(0)) + coeff
            if total:
                cleaned[exps] = total
            else:
                cleaned.pop(exps, None)
        self.terms = cleaned
        self._hash: Optional[int] = None

    # ----- shape -----

    @property
    def first_index(self) -> int:
        return 2 if self.normalized else 1

    @property
    def variable_count(self) -> int:
        return self.rank - self.first_index + 1

    @property
    def variable_names(self) -> List[str]:
        return [f"a{i}" for i in range(self.first_index, self.rank + 1)]

    # ----- constructors -----

    @classmethod
    def one(cls, rank: int, normalized: bool = True) -> "AClassPoly":
        size = rank - (2 if normalized else 1) + 1
        return cls(rank, {(0,) * size: 1}, normalized)

    @classmethod
    def monomial(cls, rank: int, exponents: Mapping[int, int], coeff: Any = 1, normalized: bool = True) -> "AClassPoly":
        """exponents maps class index i to its power, e.g. {2: 2} for a-bar_2^2"""
        first = 2 if normalized else 1
        exps = [0] * (rank - first + 1)
        for index, power in exponents.items():
            if not first <= index <= rank:
                raise OutOfRange(f"class index {index} out of range [{first}, {rank}]")
            exps[index - first] = power
        return cls(rank, {tuple(exps): coeff}, normalized)

    # ----- degree bookkeeping -----

    def term_weight(self, exps: Exponent) -> int:
        return sum((self.first_index + i) * e for i, e in enumerate(exps))

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        return len({self.term_weight(e) for e in self.terms}) <= 1

    def graded_components(self) -> Dict[int, "AClassPoly"]:
        parts: Dict[int, Dict[Exponent, Fraction]] = {}
        for exps, c in self.terms.items():
            parts.setdefault(self.term_weight(exps), {})[exps] = c
        return {w: AClassPoly(self.rank, t, self.normalized) for w, t in sorted(parts.items())}

    # ----- arithmetic -----

    def _check(self, other: "AClassPoly") -> None:
        if other.rank != self.rank or other.normalized != self.normalized:
            raise InputError("class polynomials over different variables cannot be combined")

    def __add__(self, other: "AClassPoly") -> "AClassPoly":
        self._check(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + c
        return AClassPoly(self.rank, terms, self.normalized)

    def __mul__(self, other: Union["AClassPoly", Fraction, int]) -> "AClassPoly":
        if isinstance(other, (int, Fraction)):
            return AClassPoly(self.rank, {k: v * other for k, v in self.terms.items()}, self.normalized)
        self._check(other)
        terms: Dict[Exponent, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                terms[exps] = terms.get(exps, Fraction(0)) + ca * cb
        return AClassPoly(self.rank, terms, self.normalized)

    __rmul__ = __mul__

    # ----- serialization -----

    def canonical_terms(self) -> Dict[str, Any]:
        return {
            "rank": self.rank,
            "vars": self.variable_names,
            "terms": [{"exps": list(e), "coeff": format_rational(c)} for e, c in sorted(self.terms.items())],
        }

    def to_json(self) -> Dict[str, Any]:
        return self.canonical_terms()

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, AClassPoly):
            return NotImplemented
        return (self.rank, self.normalized, self.terms) == (other.rank, other.normalized, other.terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rank, self.normalized, tuple(sorted(self.terms.items()))))
        return self._hash

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = self.variable_names
        parts = []
        for exps, c in sorted(self.terms.items()):
            mono = "*".join(f"{names[i]}^{e}" if e > 1 else names[i] for i, e in enumerate(exps) if e)
            parts.append(f"{format_rational(c)}*{mono}" if mono else format_rational(c))
        return " + ".join(parts)


def weighted_degree(poly: AClassPoly) -> WeightedDegree:
    """Max over terms of sum i * e_i; the zero polynomial is flagged"""
    if poly.is_zero():
        return WeightedDegree(zero=True)
    return WeightedDegree(max(poly.term_weight(e) for e in poly.terms))


def parse_polynomial(document: Mapping[str, Any]) -> AClassPoly:
    """Build a class polynomial from the {"rank", "vars", "terms"} document"""
    try:
        rank = int(document["rank"])
        names = list(document["vars"])
        raw_terms = document["terms"]
    except (KeyError, TypeError, ValueError) as exc:
        raise PolynomialFormatError(f"polynomial document missing field: {exc}") from exc
    if rank < 2:
        raise PolynomialFormatError(f"rank must be at least 2, got {rank}")
    if names == [f"a{i}" for i in range(2, rank + 1)]:
        normalized = True
    elif names == [f"a{i}" for i in range(1, rank + 1)]:
        normalized = False
    else:
        raise PolynomialFormatError(f"vars {names} match neither a2..a{rank} nor a1..a{rank}")
    terms: Dict[Exponent, Fraction] = {}
    if not isinstance(raw_terms, list):
        raise PolynomialFormatError("terms must be a list")
    for entry in raw_terms:
        try:
            exps = tuple(int(e) for e in entry["exps"])
            coeff = parse_rational(str(entry["coeff"]))
        except (KeyError, TypeError, ValueError, InputError) as exc:
            raise PolynomialFormatError(f"malformed term {entry!r}: {exc}") from exc
        if len(exps) != len(names) or any(e < 0 for e in exps):
            raise PolynomialFormatError(f"term exponents {list(exps)} do not fit vars {names}")
        terms[exps] = terms.get(exps, Fraction(0)) + coeff
    return AClassPoly(rank, terms, normalized)


def load_polynomial(path: Union[str, Path]) -> AClassPoly:
    try:
        document = orjson.loads(Path(path).read_bytes())
    except OSError as exc:
        raise PolynomialFormatError(f"cannot read polynomial file {path}: {exc}") from exc
    except orjson.JSONDecodeError as exc:
        raise PolynomialFormatError(f"polynomial file {path} is not valid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise PolynomialFormatError("polynomial document must be a JSON object")
    return parse_polynomial(document)
