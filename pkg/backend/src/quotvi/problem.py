"""
Quot-scheme intersection problems
Degree bookkeeping, reduced exponents and the sign u for a fully resolved problem
"""
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Any, Dict, Optional, Tuple

from loguru import logger

from ..core.errors import DegreeMismatch, InputError, NotCoprime, OutOfRange
from ..core.fingerprint import problem_fingerprint
from ..polyseries.aclass import AClassPoly, weighted_degree
from ..polyseries.mpoly import MPoly
from ..polyseries.symmetric import aclass_to_chern


@dataclass(frozen=True)
class QuotProblem:
    """Intersection of P(a-bar) S(a) a_r^M on the Quot scheme of rank-r, degree-d quotients of O^N"""

    r: int
    d: int
    g: int
    N: int
    P: AClassPoly
    S: Optional[AClassPoly]
    M: int
    m: Tuple[int, ...]
    u: int
    e: int

    @property
    def gbar(self) -> int:
        return self.g - 1

    @cached_property
    def numerator(self) -> MPoly:
        """Q_P * T_S in the Chern roots z_1..z_r (without the a_r^M factor)"""
        poly = aclass_to_chern(self.P)
        if self.S is not None:
            poly = poly * aclass_to_chern(self.S)
        return poly

    def params(self) -> Dict[str, Any]:
        return {"r": self.r, "d": self.d, "g": self.g, "N": self.N}

    def fingerprint(self, method: str) -> str:
        polys: Dict[str, Any] = {"P": self.P}
        if self.S is not None:
            polys["S"] = self.S
        return problem_fingerprint(method, self.params(), polys)

    def describe(self) -> Dict[str, Any]:
        return {
            **self.params(),
            "P": repr(self.P),
            "S": repr(self.S) if self.S is not None else "1",
            "M": self.M,
            "m": list(self.m),
            "u": self.u,
            "e": self.e,
        }


def expected_dimension(r: int, d: int, g: int, N: int) -> int:
    return N * d - r * (N - r) * (g - 1)


def _degree_of(poly: Optional[AClassPoly], label: str) -> int:
    if poly is None:
        return 0
    degree = weighted_degree(poly)
    if degree.zero:
        raise InputError(f"{label} must be nonzero")
    if not poly.is_homogeneous():
        raise DegreeMismatch(f"{label} must be homogeneous in weighted degree: {poly!r}")
    return degree.value


def build_problem(
    r: int, d: int, g: int, N: int, P: AClassPoly, S: Optional[AClassPoly] = None
) -> QuotProblem:
    """Resolve M, the reduced exponents and the sign from deg P + deg S + rM = e"""
    if r < 2:
        raise OutOfRange(f"rank must be at least 2, got {r}", r=r)
    if g < 2:
        raise OutOfRange(f"genus must be at least 2, got {g}", g=g)
    if N < r:
        raise OutOfRange(f"N must be at least r, got N={N}, r={r}", N=N, r=r)
    if N == r:
        logger.warning(f"N = r = {r}: the Quot scheme is empty for d > 0, reporting the formal value")
    if gcd(r, d) != 1:
        raise NotCoprime(f"gcd(r, d) = gcd({r}, {d}) != 1", r=r, d=d)
    if P.rank != r or not P.normalized:
        raise InputError(f"P must be a polynomial in a2..a{r}")
    if S is not None and (S.rank != r or S.normalized):
        raise InputError(f"S must be a polynomial in a1..a{r}")

    deg_p = _degree_of(P, "P")
    deg_s = _degree_of(S, "S")
    e = expected_dimension(r, d, g, N)
    remainder = e - deg_p - deg_s
    if remainder < 0 or remainder % r:
        residue_class = (N * d - deg_p - deg_s) % r
        raise DegreeMismatch(
            f"e - deg P - deg S = {remainder} is not a nonnegative multiple of r={r} "
            f"(N*d - deg P - deg S = {residue_class} mod {r})",
            e=e,
            residue_class=residue_class,
        )
    M = remainder // r
    gbar = g - 1
    m = tuple((i * (M - gbar)) % N for i in range(1, r))
    u = -1 if (gbar * r * (r - 1) // 2 + d * (r - 1)) % 2 else 1
    return QuotProblem(r=r, d=d, g=g, N=N, P=P, S=S, M=M, m=m, u=u, e=e)


def admissible_degree(r: int, d: int, g: int, N: int, weight: int) -> int:
    """d itself when e(d) >= weight, else the smallest larger degree congruent to d mod r that is"""
    if (N * d - weight) % r:
        raise DegreeMismatch(
            f"no degree congruent to {d} mod {r} balances weight {weight} at N={N}",
            residue_class=(N * d - weight) % r,
        )
    while expected_dimension(r, d, g, N) < weight:
        d += r
    return d
