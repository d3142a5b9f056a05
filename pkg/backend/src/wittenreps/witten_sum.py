"""
Witten sums over SU(r) representations
Height-truncated partial sums with an integral-comparison tail bound
"""
import time
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd
from typing import Any, Dict, Optional, Tuple

import mpmath
from loguru import logger

from ..core.config import get_settings
from ..core.errors import ConvergenceNotGuaranteed, InputError, NotCoprime, OutOfRange, PrecisionExhausted
from ..exactnum.bigcomplex import check_precision, mpf_from_fraction
from ..exactnum.cyclotomic import complex_eval
from ..polyseries.aclass import AClassPoly, weighted_degree
from ..polyseries.symmetric import aclass_to_chern
from .weights import central_trace, weights_of_height, weyl_dimension


@dataclass(frozen=True)
class WittenEstimate:
    """Partial sum up to height H, its tail bound and the discarded imaginary part"""

    value: mpmath.mpf
    tail: mpmath.mpf
    imag_max: mpmath.mpf
    decay_exponent: int
    height: int
    precision: int
    shell_sums: Tuple[mpmath.mpf, ...]

    def to_json(self, digits: int = 30) -> Dict[str, Any]:
        return {
            "value": mpmath.nstr(self.value, digits),
            "tail": mpmath.nstr(self.tail, 6),
            "imag_max": mpmath.nstr(self.imag_max, 6),
            "decay_exponent": self.decay_exponent,
            "height": self.height,
            "precision": self.precision,
        }


def decay_exponent(r: int, g: int, P: AClassPoly) -> int:
    """Power of the height by which a shell of the sum decays"""
    degree = weighted_degree(P)
    if degree.zero:
        raise InputError("P must be nonzero")
    return 2 * (g - 1) * (r - 1) - degree.value - (r - 2)


def witten_constant(r: int, g: int) -> mpmath.mpf:
    """r^g / ((2 pi)^(r(r-1) gbar) prod_{k<r} (k!)^(2 gbar)), at the current precision"""
    gbar = g - 1
    denominator = (2 * mpmath.pi) ** (r * (r - 1) * gbar)
    for k in range(1, r):
        denominator *= mpmath.mpf(factorial(k)) ** (2 * gbar)
    return mpmath.mpf(r) ** g / denominator


def witten_sum(
    r: int,
    d: int,
    g: int,
    P: AClassPoly,
    H: int,
    precision: int = 128,
    safety: Optional[int] = None,
) -> WittenEstimate:
    """C * sum_chi Trace_chi(c) / dim^(2g-1) * Q_P(2 pi i mu) over heights <= H"""
    check_precision(precision)
    if gcd(r, d) != 1:
        raise NotCoprime(f"gcd(r, d) = gcd({r}, {d}) != 1", r=r, d=d)
    if g < 2:
        raise OutOfRange(f"genus must be at least 2, got {g}", g=g)
    if H < 0:
        raise OutOfRange(f"height cutoff must be nonnegative, got {H}", H=H)
    if P.rank != r or not P.normalized:
        raise InputError(f"P must be a polynomial in a2..a{r}")
    p = decay_exponent(r, g, P)
    if p < 2:
        raise ConvergenceNotGuaranteed(
            f"shells decay like height^-{p}; need exponent >= 2 for a certified tail", decay_exponent=p
        )
    safety = get_settings().tail_safety if safety is None else safety
    start = time.perf_counter()
    chern = aclass_to_chern(P)

    # mpmath precision is process-global, so shells are summed sequentially in a fixed order
    with mpmath.workprec(precision + 32):
        constant = witten_constant(r, g)
        two_pi_i = 2j * mpmath.pi
        shells = []
        for height in range(H + 1):
            shell = mpmath.mpc(0)
            for weight in weights_of_height(r, height):
                trace = complex_eval(central_trace(weight, d), precision + 32).value
                dimension = mpmath.mpf(weyl_dimension(weight)) ** (2 * g - 1)
                point = [two_pi_i * mpf_from_fraction(m) for m in weight.mu]
                shell += trace / dimension * chern.evaluate(point, convert=mpf_from_fraction)
            shells.append(constant * shell)

        total = mpmath.mpc(0)
        for shell in shells:
            total += shell

        if H >= 1:
            low = max(1, (H + 1) // 2)
            scale = max(mpmath.fabs(shells[n]) * mpmath.mpf(n) ** p for n in range(low, H + 1))
            tail = safety * scale * mpmath.mpf(H) ** (1 - p) / (p - 1)
        else:
            tail = mpmath.inf

    with mpmath.workprec(precision):
        value = +total.real
        imag = mpmath.fabs(total.imag)
        tolerance = mpmath.mpf(2) ** (-(precision // 2)) * max(mpmath.mpf(1), mpmath.fabs(value))
        if imag > tolerance:
            raise PrecisionExhausted(
                f"imaginary part {mpmath.nstr(imag, 5)} exceeds tolerance {mpmath.nstr(tolerance, 5)}",
                precision=precision,
            )
        estimate = WittenEstimate(
            value=value,
            tail=+tail,
            imag_max=imag,
            decay_exponent=p,
            height=H,
            precision=precision,
            shell_sums=tuple(+s.real for s in shells),
        )
    elapsed = int((time.perf_counter() - start) * 1000)
    logger.info(
        f"witten r={r} d={d} g={g} H={H}: {mpmath.nstr(estimate.value, 15)} tail {mpmath.nstr(estimate.tail, 3)} ({elapsed} ms)"
    )
    return estimate
