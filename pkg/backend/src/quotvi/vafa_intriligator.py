"""
Vafa-Intriligator root-of-unity sums
Exact evaluation in Q(zeta_N) over unordered r-subsets of N-th roots of unity, plus a BigComplex cross-check
"""
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

import mpmath
from loguru import logger

from ..core.errors import InputError
from ..exactnum.bigcomplex import check_precision, mpf_from_fraction
from ..exactnum.cyclotomic import CycloNum
from ..exactnum.rational import format_rational
from .models import EvalMethod, EvalResult
from .problem import QuotProblem

Subset = Tuple[int, ...]


def colex_subsets(N: int, r: int) -> List[Subset]:
    """r-subsets of [0, N) in colexicographic order"""
    return sorted(combinations(range(N), r), key=lambda subset: subset[::-1])


def _chunks(items: Sequence[Subset], workers: int) -> List[Sequence[Subset]]:
    workers = max(1, min(workers, len(items) or 1))
    size, extra = divmod(len(items), workers)
    out, start = [], 0
    for i in range(workers):
        stop = start + size + (1 if i < extra else 0)
        out.append(items[start:stop])
        start = stop
    return out


def _check_subset(problem: QuotProblem, subset: Sequence[int]) -> Subset:
    ks = tuple(int(k) for k in subset)
    if len(ks) != problem.r or len(set(ks)) != problem.r:
        raise InputError(f"need {problem.r} distinct exponents, got {list(ks)}")
    if any(not 0 <= k < problem.N for k in ks):
        raise InputError(f"exponents must lie in [0, {problem.N}), got {list(ks)}")
    return ks


def vi_summand(problem: QuotProblem, subset: Sequence[int]) -> CycloNum:
    """A(lambda) (lambda_1...lambda_r)^(-gbar) / prod_{i<j} (lambda_i - lambda_j)^(2 gbar) at lambda_j = zeta^k_j"""
    ks = _check_subset(problem, subset)
    N = problem.N
    # A = Q_P * T_S * (z_1...z_r)^M, so the monomial part only shifts exponents
    shift = (problem.M - problem.gbar) * sum(ks)
    table = [Fraction(0)] * N
    for exps, c in problem.numerator.terms.items():
        table[(sum(e * k for e, k in zip(exps, ks)) + shift) % N] += c
    numerator = CycloNum.from_exponent_table(N, table)

    vandermonde = CycloNum.one(N)
    for i in range(problem.r):
        for j in range(i + 1, problem.r):
            vandermonde = vandermonde * (CycloNum.zeta_power(N, ks[i]) - CycloNum.zeta_power(N, ks[j]))
    return numerator / vandermonde ** (2 * problem.gbar)


def _partial_sum(problem: QuotProblem, subsets: Sequence[Subset]) -> CycloNum:
    total = CycloNum.zero(problem.N)
    for subset in subsets:
        total = total + vi_summand(problem, subset)
    return total


def vi_evaluate(problem: QuotProblem, threads: int = 1) -> EvalResult:
    """u * N^(r gbar) * sum over unordered subsets; the cyclotomic total must be rational"""
    start = time.perf_counter()
    subsets = colex_subsets(problem.N, problem.r)
    chunks = _chunks(subsets, threads)
    logger.debug(f"VI sum over {len(subsets)} subsets in {len(chunks)} chunk(s) for {problem.describe()}")

    if len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=len(chunks)) as executor:
            partials = list(executor.map(lambda chunk: _partial_sum(problem, chunk), chunks))
    else:
        partials = [_partial_sum(problem, chunk) for chunk in chunks]

    total = CycloNum.zero(problem.N)
    for partial in partials:
        total = total + partial
    value = problem.u * Fraction(problem.N) ** (problem.r * problem.gbar) * total.to_rational()

    elapsed = int((time.perf_counter() - start) * 1000)
    logger.info(f"vi-exact r={problem.r} d={problem.d} g={problem.g} N={problem.N}: {format_rational(value)} ({elapsed} ms)")
    return EvalResult.exact(value, EvalMethod.VI_EXACT, problem.fingerprint(EvalMethod.VI_EXACT.value), elapsed)


@dataclass(frozen=True)
class NumericEstimate:
    """Floating value of a VI sum; imag_max bounds the numerical noise"""

    value: mpmath.mpf
    imag_max: mpmath.mpf
    precision: int

    def to_json(self, digits: int = 30) -> Dict[str, Any]:
        return {
            "value": mpmath.nstr(self.value, digits),
            "imag_max": mpmath.nstr(self.imag_max, 5),
            "precision": self.precision,
            "method": EvalMethod.VI_NUMERIC.value,
        }


def vi_evaluate_numeric(problem: QuotProblem, precision: int = 128) -> NumericEstimate:
    """Same sum in mpmath complex arithmetic"""
    check_precision(precision)
    N, r, gbar = problem.N, problem.r, problem.gbar
    with mpmath.workprec(precision + 32):
        roots = [mpmath.expjpi(mpmath.mpf(2 * k) / N) for k in range(N)]
        total = mpmath.mpc(0)
        for subset in colex_subsets(N, r):
            lam = [roots[k] for k in subset]
            numerator = problem.numerator.evaluate(lam, convert=mpf_from_fraction)
            numerator *= roots[((problem.M - gbar) * sum(subset)) % N]
            denominator = mpmath.mpc(1)
            for i in range(r):
                for j in range(i + 1, r):
                    denominator *= (lam[i] - lam[j]) ** (2 * gbar)
            total += numerator / denominator
        total *= problem.u * mpmath.mpf(N) ** (r * gbar)
    with mpmath.workprec(precision):
        return NumericEstimate(value=+total.real, imag_max=mpmath.fabs(total.imag), precision=precision)
