"""
Iterated Laurent series
Truncated expansions in Q((v_1))...((v_m)) where later variables are infinitesimal against earlier ones
"""
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Any, Dict, Optional, Sequence, Tuple

from sympy.polys.ring_series import rs_exp, rs_series_inversion

from ..core.errors import InputError, OutOfRange, WrongVariableOrder, ZeroForm
from .mpoly import MPoly, from_qq, polynomial_ring, to_qq

Exponent = Tuple[int, ...]


# ===== One-variable series =====

@dataclass(frozen=True)
class UnivariateSeries:
    """sum_k coeffs[k] * u^k for k in [valuation, bound]; coefficients outside are not known"""

    coeffs: Dict[int, Fraction]
    bound: int

    def coefficient(self, k: int) -> Fraction:
        if k > self.bound:
            raise OutOfRange(f"coefficient {k} lies beyond the truncation bound {self.bound}")
        return self.coeffs.get(k, Fraction(0))


def _coefficients(element: Any, bound: int) -> Dict[int, Fraction]:
    return {m[0]: from_qq(c) for m, c in element.items() if m[0] <= bound and c}


def _invert_unit_series(coeffs: Sequence[Fraction], bound: int) -> Dict[int, Fraction]:
    """Power-series inverse of a series with constant term 1, through degree bound"""
    if bound < 0:
        return {}
    R = polynomial_ring(1)
    unit = R.from_dict({(k,): to_qq(c) for k, c in enumerate(coeffs[:bound + 1]) if c})
    return _coefficients(rs_series_inversion(unit, R.gens[0], bound + 1), bound)


def reciprocal_expm1_series(T: int) -> UnivariateSeries:
    """1/(e^Y - 1) = Y^-1 * (Y/(e^Y - 1)) through degree T"""
    if T < -1:
        raise OutOfRange(f"truncation bound must be at least -1, got {T}")
    # (e^Y - 1)/Y = sum Y^n/(n+1)!
    quotient = [Fraction(1, factorial(n + 1)) for n in range(T + 2)]
    bernoulli = _invert_unit_series(quotient, T + 1)
    return UnivariateSeries({k - 1: c for k, c in bernoulli.items()}, T)


def ahat_factor_series(T: int) -> UnivariateSeries:
    """u / (2 sinh(u/2)) through degree T"""
    if T < 0:
        raise OutOfRange(f"truncation bound must be nonnegative, got {T}")
    # 2 sinh(u/2)/u = sum_n (u/2)^(2n) / (2n+1)!
    sinh_ratio = [Fraction(0)] * (T + 1)
    for n in range(0, T // 2 + 1):
        sinh_ratio[2 * n] = Fraction(1, factorial(2 * n + 1) * 4 ** n)
    return UnivariateSeries(_invert_unit_series(sinh_ratio, T), T)


def exp_series(scale: Fraction, T: int) -> UnivariateSeries:
    """exp(scale * u) through degree T"""
    scale = Fraction(scale)
    if T < 0:
        return UnivariateSeries({}, T)
    if not scale:
        return UnivariateSeries({0: Fraction(1)}, T)
    R = polynomial_ring(1)
    u = R.gens[0]
    return UnivariateSeries(_coefficients(rs_exp(u.mul_ground(to_qq(scale)), u, T + 1), T), T)


def geometric_series(ratio: Fraction, T: int) -> UnivariateSeries:
    """1/(1 - ratio * u) through degree T"""
    ratio = Fraction(ratio)
    return UnivariateSeries({k: ratio ** k for k in range(max(T, -1) + 1) if ratio ** k}, T)


# ===== Contexts and cone degrees =====

@dataclass(frozen=True)
class SeriesContext:
    """Ordered variables (later = smaller) and the cone truncation bound T"""

    variables: Tuple[str, ...]
    T: int

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise InputError(f"series variables must be unique: {self.variables}")

    @property
    def size(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError as exc:
            raise InputError(f"unknown series variable {name!r}") from exc

    def with_bound(self, T: int) -> "SeriesContext":
        return SeriesContext(self.variables, T)


def cone_degrees(exps: Sequence[int]) -> Tuple[int, ...]:
    """Tail sums b_j = a_j + ... + a_m; b_1 is the total degree"""
    out = [0] * len(exps)
    acc = 0
    for j in range(len(exps) - 1, -1, -1):
        acc += exps[j]
        out[j] = acc
    return tuple(out)


def _fits(exps: Sequence[int], T: int) -> bool:
    acc = 0
    for j in range(len(exps) - 1, -1, -1):
        acc += exps[j]
        if acc > T:
            return False
    return True


# ===== Iterated Laurent series =====

class IterLaurent:
    """Truncated iterated Laurent series; only terms with every cone degree <= T are kept"""

    __slots__ = ("context", "terms")

    def __init__(self, context: SeriesContext, terms: Optional[Dict[Exponent, Fraction]] = None):
        self.context = context
        kept: Dict[Exponent, Fraction] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != context.size:
                raise InputError(f"exponent vector {exps} does not match context {context.variables}")
            if c and _fits(exps, context.T):
                kept[tuple(exps)] = Fraction(c)
        self.terms = kept

    @classmethod
    def _raw(cls, context: SeriesContext, terms: Dict[Exponent, Fraction]) -> "IterLaurent":
        series = cls.__new__(cls)
        series.context = context
        series.terms = {k: v for k, v in terms.items() if v}
        return series

    # ----- constructors -----

    @classmethod
    def constant(cls, context: SeriesContext, value: Fraction) -> "IterLaurent":
        return cls(context, {(0,) * context.size: Fraction(value)})

    @classmethod
    def monomial(cls, context: SeriesContext, exps: Exponent, coeff: Fraction = Fraction(1)) -> "IterLaurent":
        return cls(context, {tuple(exps): Fraction(coeff)})

    @classmethod
    def from_mpoly(cls, context: SeriesContext, poly: MPoly) -> "IterLaurent":
        if poly.n != context.size:
            raise InputError(f"polynomial in {poly.n} variables cannot live in context {context.variables}")
        return cls(context, dict(poly.terms))

    @classmethod
    def from_univariate(cls, context: SeriesContext, series: UnivariateSeries, variable: str) -> "IterLaurent":
        """Embed a one-variable series in the given context variable"""
        index = context.index(variable)
        # cone degrees of u^k placed at index j are k on coordinates 0..j
        if series.bound < context.T:
            raise InputError(f"series known through degree {series.bound}, context needs {context.T}")
        terms = {}
        for k, c in series.coeffs.items():
            exps = [0] * context.size
            exps[index] = k
            terms[tuple(exps)] = c
        return cls(context, terms)

    # ----- inspection -----

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Exponent) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def floor(self) -> int:
        """Smallest cone degree over all terms (0 for the zero series)"""
        if not self.terms:
            return 0
        return min(min(cone_degrees(e)) for e in self.terms)

    # ----- arithmetic -----

    def _check(self, other: "IterLaurent") -> None:
        if other.context.variables != self.context.variables:
            raise InputError(f"context mismatch: {self.context.variables} vs {other.context.variables}")

    def __add__(self, other: "IterLaurent") -> "IterLaurent":
        self._check(other)
        T = min(self.context.T, other.context.T)
        terms = {k: v for k, v in self.terms.items()}
        for exps, c in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + c
        return IterLaurent(self.context.with_bound(T), terms)

    def __neg__(self) -> "IterLaurent":
        return IterLaurent._raw(self.context, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "IterLaurent") -> "IterLaurent":
        return self + (-other)

    def scale(self, factor: Fraction) -> "IterLaurent":
        return IterLaurent._raw(self.context, {k: v * factor for k, v in self.terms.items()})

    def __mul__(self, other) -> "IterLaurent":
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(other))
        self._check(other)
        T = min(self.context.T, other.context.T)
        right = [(exps, cone_degrees(exps), c) for exps, c in other.terms.items()]
        terms: Dict[Exponent, Fraction] = {}
        for ea, ca in self.terms.items():
            ba = cone_degrees(ea)
            for eb, bb, cb in right:
                if any(x + y > T for x, y in zip(ba, bb)):
                    continue
                exps = tuple(x + y for x, y in zip(ea, eb))
                terms[exps] = terms.get(exps, Fraction(0)) + ca * cb
        return IterLaurent._raw(self.context.with_bound(T), terms)

    __rmul__ = __mul__

    def power(self, exponent: int) -> "IterLaurent":
        if exponent < 0:
            raise OutOfRange("use cone_reciprocal for negative powers")
        result = IterLaurent.constant(self.context, Fraction(1))
        for _ in range(exponent):
            result = result * self
        return result

    def equals(self, other: "IterLaurent") -> bool:
        self._check(other)
        return self.terms == other.terms

    def __repr__(self) -> str:
        names = self.context.variables
        parts = []
        for exps, c in sorted(self.terms.items()):
            mono = "*".join(f"{names[i]}^{e}" for i, e in enumerate(exps) if e)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return f"IterLaurent[{', '.join(names)}; T={self.context.T}](" + " + ".join(parts or ["0"]) + ")"


# ===== Reciprocals and residues =====

def leading_exponent(form: MPoly) -> Exponent:
    """Dominant term: smallest power of the last variable, then of the one before, and so on"""
    return min(form.terms, key=lambda exps: tuple(reversed(exps)))


def cone_reciprocal(form: MPoly, power: int, ctx: SeriesContext) -> IterLaurent:
    """form^(-power) expanded in the iterated Laurent field of ctx, truncated at ctx.T"""
    if power < 1:
        raise OutOfRange(f"reciprocal power must be positive, got {power}")
    if form.n != ctx.size:
        raise InputError(f"form in {form.n} variables cannot live in context {ctx.variables}")
    if form.is_zero():
        raise ZeroForm("reciprocal of the zero form")
    lead = leading_exponent(form)
    lead_coeff = form.terms[lead]
    lead_cone = cone_degrees(lead)

    # form = lead_coeff * v^lead * (1 + w), every term of w has nonnegative cone degrees
    ratio_terms: Dict[Exponent, Fraction] = {}
    for exps, c in form.terms.items():
        if exps == lead:
            continue
        delta = tuple(a - b for a, b in zip(exps, lead))
        if any(b < 0 for b in cone_degrees(delta)):
            raise InputError(
                f"form is not expandable in the cone of {ctx.variables}: term {exps} dominates {lead}"
            )
        ratio_terms[delta] = c / lead_coeff

    shift = tuple(-power * a for a in lead)
    working_T = ctx.T + power * max(lead_cone, default=0)
    inner = SeriesContext(ctx.variables, working_T)
    w = IterLaurent(inner, ratio_terms)

    # (1 + w)^(-power) = sum_k binom(-power, k) w^k
    total: Dict[Exponent, Fraction] = {(0,) * ctx.size: Fraction(1)}
    w_power = IterLaurent.constant(inner, Fraction(1))
    binom = Fraction(1)
    k = 0
    while True:
        k += 1
        w_power = w_power * w
        if w_power.is_zero():
            break
        binom = binom * (-power - k + 1) / k
        for exps, c in w_power.terms.items():
            total[exps] = total.get(exps, Fraction(0)) + binom * c

    scale = Fraction(1) / lead_coeff ** power
    shifted = {tuple(a + s for a, s in zip(exps, shift)): c * scale for exps, c in total.items()}
    return IterLaurent(ctx, shifted)


def inner_residue(series: IterLaurent, variable: str) -> IterLaurent:
    """Coefficient of variable^-1 where variable is innermost; the result lives on the shortened context"""
    ctx = series.context
    if not ctx.variables or ctx.variables[-1] != variable:
        raise WrongVariableOrder(
            f"residue in {variable!r} requested but innermost variable is "
            f"{ctx.variables[-1] if ctx.variables else None!r}",
            variable=variable,
            context=list(ctx.variables),
        )
    shortened = SeriesContext(ctx.variables[:-1], ctx.T + 1)
    terms = {exps[:-1]: c for exps, c in series.terms.items() if exps[-1] == -1}
    return IterLaurent._raw(shortened, terms)


def iterated_residue(series: IterLaurent) -> Fraction:
    """Residues right to left until no variable is left"""
    current = series
    while current.context.variables:
        current = inner_residue(current, current.context.variables[-1])
    return current.coefficient(())
