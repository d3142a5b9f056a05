"""
Leading N-asymptotics of Quot intersections
Exact values along an N-progression, Newton divided differences, and the ratio sequence V(N)/N^e
"""
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field

from ..core.errors import InputError, InsufficientPoints
from ..exactnum.rational import format_rational
from ..polyseries.aclass import AClassPoly, weighted_degree
from ..quotvi.models import EvalMethod
from ..quotvi.problem import admissible_degree, build_problem
from ..quotvi.vafa_intriligator import vi_evaluate
from ..quotvi.validity import validity_check
from ..residueengine.moduli import moduli_pairing
from ..residueengine.quot_residue import quot_residue


class AsymptoticVerdict(str, Enum):
    INTERPOLATED_MATCH = "interpolated-match"
    INTERPOLATED_MISMATCH = "interpolated-mismatch"
    RATIO_CONVERGES = "ratio-converges"
    RATIO_FAILS = "ratio-fails"


class SamplePoint(BaseModel):
    N: int
    d: int = Field(description="Degree used, congruent to the requested class")
    value: str
    method: EvalMethod
    ratio: str = Field(description="V(N) / N^e exactly")


class AsymptoticReport(BaseModel):
    r: int
    d: int
    g: int
    P: str
    exponent: int = Field(description="e(P) = r^2 gbar + 1 - deg P")
    samples: List[SamplePoint]
    interpolated_coefficient: Optional[str] = Field(default=None, description="N^e coefficient when differences stabilize")
    target: str = Field(description="moduli pairing / r^g")
    ratio_fit: Optional[List[float]] = Field(default=None, description="(slope, intercept) of ratio - target against 1/N")
    verdict: AsymptoticVerdict
    annotations: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict in (AsymptoticVerdict.INTERPOLATED_MATCH, AsymptoticVerdict.RATIO_CONVERGES)


def leading_exponent(r: int, g: int, P: AClassPoly) -> int:
    return r * r * (g - 1) + 1 - weighted_degree(P).value


def divided_differences(xs: Sequence[int], ys: Sequence[Fraction]) -> List[Fraction]:
    """Newton coefficients f[x_0], f[x_0, x_1], ..., f[x_0..x_n]"""
    table = [Fraction(y) for y in ys]
    coefficients = [table[0]]
    for order in range(1, len(xs)):
        table = [
            (table[i + 1] - table[i]) / (xs[i + order] - xs[i])
            for i in range(len(table) - 1)
        ]
        coefficients.append(table[0])
    return coefficients


def _ratio_verdict(ns: Sequence[int], ratios: Sequence[Fraction], target: Fraction):
    deviations = np.array([float(q - target) for q in ratios])
    inverse = np.array([1.0 / n for n in ns])
    slope, intercept = np.polyfit(inverse, deviations, 1)
    magnitudes = np.abs(deviations)
    monotone = bool(np.all(np.diff(magnitudes) <= 1e-15 * max(1.0, float(magnitudes.max()))))
    small_intercept = abs(intercept) <= 0.1 * float(magnitudes.max()) + 1e-12
    return monotone and small_intercept, [float(slope), float(intercept)]


def asymptotic_extract(r: int, d0: int, g: int, P: AClassPoly, N_list: Sequence[int]) -> AsymptoticReport:
    """Leading coefficient of V(N) in N^e(P), compared against the moduli pairing divided by r^g"""
    exponent = leading_exponent(r, g, P)
    ns = sorted(set(int(n) for n in N_list))
    if len(ns) != len(N_list):
        raise InputError("N list contains duplicates")
    if len(ns) < exponent + 2:
        raise InsufficientPoints(
            f"need at least e(P) + 2 = {exponent + 2} sample points, got {len(ns)}", exponent=exponent
        )
    weight = weighted_degree(P).value

    samples: List[SamplePoint] = []
    values: List[Fraction] = []
    annotations: List[str] = []
    for N in ns:
        d = admissible_degree(r, d0, g, N, weight)
        problem = build_problem(r, d, g, N, P)
        if validity_check(problem).valid:
            result = quot_residue(problem)
        else:
            result = vi_evaluate(problem)
            annotations.append(f"N={N}: residue path inapplicable, VI sum used")
        value = result.rational
        values.append(value)
        samples.append(
            SamplePoint(N=N, d=d, value=result.value, method=result.method, ratio=format_rational(value / Fraction(N) ** exponent))
        )
        if d != d0:
            annotations.append(f"N={N}: degree lifted from {d0} to {d} within its class mod {r}")

    target = moduli_pairing(r, d0, g, P) / Fraction(r) ** g
    coefficients = divided_differences(ns, values)
    interpolated: Optional[Fraction] = None
    if all(c == 0 for c in coefficients[exponent + 1:]):
        interpolated = coefficients[exponent]

    ratios = [value / Fraction(N) ** exponent for N, value in zip(ns, values)]
    ratio_ok, fit = _ratio_verdict(ns, ratios, target)

    if interpolated is not None:
        verdict = AsymptoticVerdict.INTERPOLATED_MATCH if interpolated == target else AsymptoticVerdict.INTERPOLATED_MISMATCH
    else:
        annotations.append("values are not polynomial of degree e(P) on the sampled progression")
        verdict = AsymptoticVerdict.RATIO_CONVERGES if ratio_ok else AsymptoticVerdict.RATIO_FAILS

    logger.info(
        f"asymptotics r={r} d={d0} g={g} P={P!r}: e={exponent}, target {format_rational(target)}, "
        f"interpolated {format_rational(interpolated) if interpolated is not None else 'n/a'} -> {verdict.value}"
    )
    return AsymptoticReport(
        r=r,
        d=d0,
        g=g,
        P=repr(P),
        exponent=exponent,
        samples=samples,
        interpolated_coefficient=format_rational(interpolated) if interpolated is not None else None,
        target=format_rational(target),
        ratio_fit=fit,
        verdict=verdict,
        annotations=annotations,
    )
