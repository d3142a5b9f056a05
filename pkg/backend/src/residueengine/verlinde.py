"""
Verlinde numbers by residues
chi(L^s) as the pairing of exp((s+1) r f2) with the A-hat class of the moduli space
"""
import time
from fractions import Fraction
from typing import Optional

from loguru import logger

from ..core.errors import OutOfRange
from ..exactnum.rational import format_rational, require_integer
from ..polyseries.mpoly import MPoly
from ..polyseries.series import ahat_factor_series
from .moduli import _check_inputs, exp_weighted_polynomial, moduli_dimension, pair_in_y
from .xy import build_xy_system


def ahat_class(r: int, g: int) -> MPoly:
    """prod_{i<j} (u/(2 sinh(u/2)))^(2 gbar) at u = X_i - X_j, in Y-variables through degree dim"""
    dimension = moduli_dimension(r, g)
    gbar = g - 1
    series = ahat_factor_series(dimension)
    xy = build_xy_system(r)
    total = MPoly.constant(r - 1, 1)
    for i in range(r):
        for j in range(i + 1, r):
            u = xy.difference(i, j)
            factor = MPoly.constant(r - 1, 0)
            for k, c in series.coeffs.items():
                factor = factor + u.power(k, dimension) * c
            total = total.multiply(factor.power(2 * gbar, dimension), dimension)
    return total


def verlinde_chi(r: int, d: int, g: int, s: int, certify: Optional[bool] = None) -> Fraction:
    """chi(L^s) on the moduli space of rank-r, degree-d stable bundles; always an integer"""
    _check_inputs(r, d, g)
    if s < 0:
        raise OutOfRange(f"level s must be nonnegative, got {s}", s=s)
    start = time.perf_counter()
    c = Fraction((s + 1) * r)
    combined = exp_weighted_polynomial(r, g, c, ahat_class(r, g).homogeneous_components())
    value = pair_in_y(r, d, g, combined, certify=certify)
    require_integer(value, f"chi(L^{s}) for r={r}, d={d}, g={g}")
    elapsed = int((time.perf_counter() - start) * 1000)
    logger.info(f"verlinde residue r={r} d={d} g={g} s={s}: {format_rational(value)} ({elapsed} ms)")
    return value


def verlinde_closed_form_rank2_genus2(s: int) -> Fraction:
    """(2/3)(s+1)^3 + (s+1)/3, the rank-2 genus-2 Verlinde polynomial"""
    return Fraction(2, 3) * (s + 1) ** 3 + Fraction(s + 1, 3)
