"""
Quot-side iterated residue
Residues at y_i = 1 after the shift y_i = 1 + t_i, with t_{r-1} innermost
"""
import time
from fractions import Fraction
from typing import List, Optional

from loguru import logger

from ..core.errors import ResiduePathInvalid
from ..exactnum.rational import format_rational
from ..polyseries.mpoly import MPoly
from ..polyseries.series import geometric_series
from ..quotvi.models import EvalMethod, EvalResult
from ..quotvi.problem import QuotProblem
from ..quotvi.validity import validity_check
from .kernel import Factor, poly_factor, reciprocal_factor, residue_of_product, univariate_factor


def _root_images(r: int) -> List[MPoly]:
    """x_i = (1 + t_i)...(1 + t_{r-1}) and x_r = 1, as polynomials in t_1..t_{r-1}"""
    n = r - 1
    images = []
    for i in range(r):
        image = MPoly.constant(n, 1)
        for k in range(i, n):
            image = image * (MPoly.variable(n, k) + 1)
        images.append(image)
    return images


def quot_factors(problem: QuotProblem) -> List[Factor]:
    r, N = problem.r, problem.N
    n = r - 1
    images = _root_images(r)
    factors: List[Factor] = []

    polynomial = problem.numerator.substitute(images)
    for k in range(n):
        shifted = MPoly.variable(n, k) + 1
        polynomial = polynomial * shifted ** problem.m[k]
        name = f"t{k + 1}"
        factors.append(univariate_factor(f"1/y{k + 1}", name, lambda T: geometric_series(Fraction(-1), T)))
        factors.append(reciprocal_factor(f"N/(y{k + 1}^N-1)", shifted ** N - 1, 1, Fraction(N)))
    factors.append(poly_factor("numerator", polynomial))
    for i in range(r):
        for j in range(i + 1, r):
            factors.append(reciprocal_factor(f"(x{i + 1}-x{j + 1})^-2g", images[i] - images[j], 2 * problem.gbar))
    return factors


def quot_residue(problem: QuotProblem, certify: Optional[bool] = None) -> EvalResult:
    """u * (-1)^(r-1) * N^(r gbar + 1) * Res / r, equal to the VI sum when the residue path is valid"""
    report = validity_check(problem)
    if not report.valid:
        raise ResiduePathInvalid(
            "; ".join(report.reasons), problem=problem.describe(), reasons=report.reasons
        )
    start = time.perf_counter()
    variables = [f"t{k + 1}" for k in range(problem.r - 1)]
    residue, bound = residue_of_product(variables, quot_factors(problem), certify=certify)
    sign = problem.u * (-1) ** (problem.r - 1)
    value = sign * Fraction(problem.N) ** (problem.r * problem.gbar + 1) * residue / problem.r

    elapsed = int((time.perf_counter() - start) * 1000)
    logger.info(
        f"quot-residue r={problem.r} d={problem.d} g={problem.g} N={problem.N} T={bound}: "
        f"{format_rational(value)} ({elapsed} ms)"
    )
    return EvalResult.exact(value, EvalMethod.QUOT_RESIDUE, problem.fingerprint(EvalMethod.QUOT_RESIDUE.value), elapsed)
