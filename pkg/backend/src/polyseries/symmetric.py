"""
Symmetric-function translation
Class polynomials become symmetric polynomials in the Chern roots x_1..x_r
"""
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import List

from ..core.errors import OutOfRange
from .aclass import AClassPoly
from .mpoly import MPoly


@lru_cache(maxsize=None)
def elementary_symmetric(k: int, n: int) -> MPoly:
    """k-th elementary symmetric polynomial in n variables"""
    if k < 0 or k > n:
        raise OutOfRange(f"elementary symmetric index {k} outside [0, {n}]", k=k, n=n)
    terms = {}
    for subset in combinations(range(n), k):
        exps = [0] * n
        for i in subset:
            exps[i] = 1
        terms[tuple(exps)] = Fraction(1)
    return MPoly(n, terms)


def normalized_variables(r: int) -> List[MPoly]:
    """x-bar_i = x_i - (x_1 + ... + x_r) / r"""
    mean = MPoly.linear([Fraction(1, r)] * r)
    return [MPoly.variable(r, i) - mean for i in range(r)]


@lru_cache(maxsize=None)
def _class_images(r: int, normalized: bool) -> tuple:
    first = 2 if normalized else 1
    if normalized:
        shifted = normalized_variables(r)
        return tuple(elementary_symmetric(i, r).substitute(shifted) for i in range(first, r + 1))
    return tuple(elementary_symmetric(i, r) for i in range(first, r + 1))


@lru_cache(maxsize=512)
def aclass_to_chern(poly: AClassPoly) -> MPoly:
    """Q(x) = P(s_2(x-bar), ..., s_r(x-bar)); plain classes use s_i(x) directly"""
    images = list(_class_images(poly.rank, poly.normalized))
    lifted = MPoly(poly.variable_count, poly.terms)
    return lifted.substitute(images)


def is_symmetric(poly: MPoly) -> bool:
    """Invariant under every adjacent transposition"""
    for i in range(poly.n - 1):
        permutation = list(range(poly.n))
        permutation[i], permutation[i + 1] = permutation[i + 1], permutation[i]
        if poly.permute(permutation) != poly:
            return False
    return True


def is_translation_invariant(poly: MPoly) -> bool:
    """Substitute x_i -> x_i + c with a fresh variable c and check c cancels"""
    n = poly.n
    shift = MPoly.variable(n + 1, n)
    images = [MPoly.variable(n + 1, i) + shift for i in range(n)]
    shifted = poly.substitute(images)
    return all(exps[n] == 0 for exps in shifted.terms) and shifted == MPoly(
        n + 1, {exps + (0,): c for exps, c in poly.terms.items()}
    )
