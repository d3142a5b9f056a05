"""
Verlinde numbers by Grassmannian map counts
Quot intersections a_r^M on N = r(s+1) divided by (s+1)^g, compared with the residue path
"""
import time
from fractions import Fraction
from math import gcd

from loguru import logger
from pydantic import BaseModel, Field

from ..core.errors import DegreeMismatch, NotCoprime, OutOfRange
from ..exactnum.rational import format_rational, parse_rational
from ..polyseries.aclass import AClassPoly
from ..quotvi.problem import build_problem, expected_dimension
from ..quotvi.vafa_intriligator import vi_evaluate
from ..quotvi.validity import validity_check
from ..residueengine.quot_residue import quot_residue
from ..residueengine.verlinde import verlinde_chi


class MapCountReport(BaseModel):
    """Verlinde number by map counting, with the Quot problem actually evaluated"""
    value: str = Field(description="chi(L^s) as a canonical rational")
    requested_d: int = Field(description="Degree given by the caller")
    d: int = Field(description="Degree used; requested_d + k*r with the smallest k >= 0 giving M >= 0")
    lifted: bool = Field(description="d differs from requested_d")
    N: int = Field(description="Sections, r(s+1)")
    M: int = Field(description="Exponent of a_r, s(d - r gbar) + d")
    quot_value: str = Field(description="Quot intersection of a_r^M before dividing by (s+1)^g")
    quot_method: str = Field(description="quot-residue or vi-exact")

    @property
    def rational(self) -> Fraction:
        return parse_rational(self.value)


def mapcount_exponent(r: int, d: int, g: int, s: int) -> int:
    """M = s(d - r gbar) + d"""
    return s * (d - r * (g - 1)) + d


def mapcount_report(r: int, d: int, g: int, s: int, method: str = "vi", threads: int = 1) -> MapCountReport:
    """Quot intersection of a_r^M on N = r(s+1) sections, divided by (s+1)^g"""
    if s < 1:
        raise OutOfRange(f"map-count path needs s >= 1, got {s}", s=s)
    if gcd(r, d) != 1:
        raise NotCoprime(f"gcd(r, d) = gcd({r}, {d}) != 1", r=r, d=d)
    start = time.perf_counter()
    N = r * (s + 1)
    degree = d
    M = mapcount_exponent(r, degree, g, s)
    while M < 0:
        degree += r
        M = mapcount_exponent(r, degree, g, s)
    if degree != d:
        logger.info(f"map count: degree {d} gives negative M, using {degree} in the same class mod {r}")

    e = expected_dimension(r, degree, g, N)
    if r * M != e:
        raise DegreeMismatch(f"r*M = {r * M} but the expected dimension is {e}", M=M, e=e)
    problem = build_problem(r, degree, g, N, AClassPoly.one(r))
    if problem.M != M:
        raise DegreeMismatch(f"map-count exponent {M} disagrees with degree bookkeeping {problem.M}")

    if method == "residue" and validity_check(problem).valid:
        quot = quot_residue(problem)
    else:
        quot = vi_evaluate(problem, threads=threads)
    value = quot.rational / Fraction(s + 1) ** g
    elapsed = int((time.perf_counter() - start) * 1000)
    logger.info(f"verlinde mapcount r={r} d={degree} g={g} s={s}: {format_rational(value)} ({elapsed} ms)")
    return MapCountReport(
        value=format_rational(value),
        requested_d=d,
        d=degree,
        lifted=degree != d,
        N=N,
        M=M,
        quot_value=quot.value,
        quot_method=quot.method.value,
    )


def verlinde_mapcount(r: int, d: int, g: int, s: int, method: str = "vi", threads: int = 1) -> Fraction:
    """Value of mapcount_report; the degree actually used is on the report"""
    return mapcount_report(r, d, g, s, method, threads).rational


def verlinde_ratio(r: int, d: int, g: int, s: int) -> Fraction:
    """Map-count value over the residue value; exactly 1 when both paths agree"""
    return verlinde_mapcount(r, d, g, s) / verlinde_chi(r, d, g, s)
