"""
Moduli-space pairings
Iterated residues in Y_1..Y_{r-1} computing integrals of exp(c f2) P(a-bar) over stable bundles
"""
import time
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import List, Optional

from loguru import logger

from ..core.errors import DegreeMismatch, InputError, NotCoprime, OutOfRange
from ..exactnum.rational import format_rational
from ..polyseries.aclass import AClassPoly, weighted_degree
from ..polyseries.mpoly import MPoly
from ..polyseries.series import IterLaurent, SeriesContext, exp_series, reciprocal_expm1_series
from ..polyseries.symmetric import aclass_to_chern
from .kernel import Factor, poly_factor, reciprocal_factor, residue_of_product, univariate_factor
from .xy import build_L_form, build_xy_system


def moduli_dimension(r: int, g: int) -> int:
    return (r * r - 1) * (g - 1)


def _check_inputs(r: int, d: int, g: int) -> None:
    if r < 2:
        raise OutOfRange(f"rank must be at least 2, got {r}", r=r)
    if g < 2:
        raise OutOfRange(f"genus must be at least 2, got {g}", g=g)
    if gcd(r, d) != 1:
        raise NotCoprime(f"gcd(r, d) = gcd({r}, {d}) != 1", r=r, d=d)


def _kernel_factors(r: int, d: int, g: int) -> List[Factor]:
    """prod 1/(e^Y_i - 1) * exp(L) / prod_{i<j} (X_i - X_j)^(2 gbar)"""
    gbar = g - 1
    ell = build_L_form(r, d)
    xy = build_xy_system(r)
    factors: List[Factor] = []
    for k in range(r - 1):
        name = f"Y{k + 1}"
        factors.append(univariate_factor(f"1/(e^{name}-1)", name, reciprocal_expm1_series, floor=-1))
        coefficient = ell.coefficients[k]
        factors.append(univariate_factor(f"exp({coefficient}{name})", name, lambda T, c=coefficient: exp_series(c, T)))
    for i in range(r):
        for j in range(i + 1, r):
            factors.append(reciprocal_factor(f"(X{i + 1}-X{j + 1})^-2g", xy.difference(i, j), 2 * gbar))
    return factors


@lru_cache(maxsize=64)
def _kernel_series(r: int, d_class: int, g: int, T: int) -> IterLaurent:
    ctx = SeriesContext(tuple(f"Y{k + 1}" for k in range(r - 1)), T)
    product = IterLaurent.constant(ctx, Fraction(1))
    for factor in _kernel_factors(r, d_class, g):
        product = product * factor.build(ctx)
    return product


def pair_in_y(r: int, d: int, g: int, q_y: MPoly, certify: Optional[bool] = None) -> Fraction:
    """(-1)^(gbar r(r-1)/2) r^gbar Res ... Res [kernel * q_y], with q_y a polynomial in Y_1..Y_{r-1}"""
    _check_inputs(r, d, g)
    if q_y.n != r - 1:
        raise InputError(f"pairing polynomial must live in {r - 1} Y-variables")
    if q_y.is_zero():
        return Fraction(0)
    gbar = g - 1
    d_class = d % r
    kernel_floor = sum(f.floor for f in _kernel_factors(r, d_class, g))
    kernel = Factor("moduli-kernel", kernel_floor, lambda ctx: _kernel_series(r, d_class, g, ctx.T))
    variables = [f"Y{k + 1}" for k in range(r - 1)]
    residue, _ = residue_of_product(variables, [poly_factor("Q", q_y), kernel], certify=certify)
    sign = -1 if (gbar * comb(r, 2)) % 2 else 1
    return sign * Fraction(r) ** gbar * residue


def chern_to_y(r: int, q_x: MPoly) -> MPoly:
    """Substitute X_i(Y) for the Chern roots x_i"""
    return q_x.substitute(list(build_xy_system(r).X))


def moduli_pairing(r: int, d: int, g: int, P: AClassPoly, certify: Optional[bool] = None) -> Fraction:
    """Integral of exp(f2) P(a-bar) over the moduli space of stable bundles"""
    _check_inputs(r, d, g)
    if P.rank != r or not P.normalized:
        raise InputError(f"P must be a polynomial in a2..a{r}")
    start = time.perf_counter()
    degree = weighted_degree(P)
    if degree.zero:
        return Fraction(0)
    if degree.value > moduli_dimension(r, g):
        logger.debug(f"deg P = {degree.value} exceeds dim = {moduli_dimension(r, g)}; residue still evaluated")
    value = pair_in_y(r, d, g, chern_to_y(r, aclass_to_chern(P)), certify=certify)
    elapsed = int((time.perf_counter() - start) * 1000)
    logger.info(f"moduli pairing r={r} d={d} g={g} P={P!r}: {format_rational(value)} ({elapsed} ms)")
    return value


def exp_weighted_polynomial(r: int, g: int, c: Fraction, components: dict) -> MPoly:
    """sum_k c^(D-k) Q_k for Y-polynomials Q_k keyed by degree k <= D"""
    dimension = moduli_dimension(r, g)
    total = MPoly.zero(r - 1)
    for k, q_y in components.items():
        if k > dimension:
            raise DegreeMismatch(f"component of degree {k} exceeds the moduli dimension {dimension}")
        total = total + q_y * Fraction(c) ** (dimension - k)
    return total


def moduli_exp_pairing(r: int, d: int, g: int, c: Fraction, series: AClassPoly, certify: Optional[bool] = None) -> Fraction:
    """Integral of exp(c f2) times the class polynomial, by degree selection on its graded components"""
    _check_inputs(r, d, g)
    if series.rank != r or not series.normalized:
        raise InputError(f"series must be a polynomial in a2..a{r}")
    components = {
        k: chern_to_y(r, aclass_to_chern(part)) for k, part in series.graded_components().items()
    }
    combined = exp_weighted_polynomial(r, g, Fraction(c), components)
    value = pair_in_y(r, d, g, combined, certify=certify)
    logger.info(f"exp pairing r={r} d={d} g={g} c={format_rational(Fraction(c))}: {format_rational(value)}")
    return value
