"""
Segre-class leading coefficient check
Degree-k part of prod_i (1 + h_i)^(-N) as a polynomial in N, compared against (-1)^k (sum h)^k / k!
"""
from fractions import Fraction
from math import factorial
from typing import Dict, Iterator, Tuple

from ..core.errors import OutOfRange
from .mpoly import MPoly


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def _binomial_negative_n(j: int, n_vars: int) -> MPoly:
    """binom(-N, j) as a polynomial in variable 0 of an n_vars ring"""
    big_n = MPoly.variable(n_vars, 0)
    result = MPoly.constant(n_vars, Fraction(1, factorial(j)))
    for i in range(j):
        result = result * (-big_n - i)
    return result


def segre_leading_coefficient(s: int, k: int) -> Tuple[MPoly, MPoly, bool]:
    """
    Returns (degree-k part in variables N, h_1..h_s; its N^k coefficient in h_1..h_s;
    whether that coefficient equals (-1)^k (h_1 + ... + h_s)^k / k!)
    """
    if s < 1 or k < 0:
        raise OutOfRange(f"need s >= 1 and k >= 0, got s={s}, k={k}", s=s, k=k)
    n_vars = s + 1
    full = MPoly.zero(n_vars)
    binomials: Dict[int, MPoly] = {j: _binomial_negative_n(j, n_vars) for j in range(k + 1)}
    for parts in _compositions(k, s):
        term = MPoly.constant(n_vars, 1)
        for i, j in enumerate(parts):
            if j:
                term = term * binomials[j] * MPoly.variable(n_vars, i + 1) ** j
        full = full + term
    leading = MPoly(s, {exps[1:]: c for exps, c in full.terms.items() if exps[0] == k})
    expected = MPoly.linear([1] * s) ** k * Fraction((-1) ** k, factorial(k))
    return full, leading, leading == expected
