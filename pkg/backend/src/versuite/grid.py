"""
Verification grids
Admissible (r, d, g, N, P) tuples from parameter ranges and a seeded polynomial generator
"""
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any, Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

from ..core.errors import InputError
from ..polyseries.aclass import AClassPoly, parse_polynomial, weighted_degree
from ..quotvi.problem import QuotProblem, admissible_degree, build_problem


class GridSpec(BaseModel):
    """Parameter ranges for cross-method sweeps"""
    ranks: List[int] = Field(default_factory=lambda: [2], description="Ranks r >= 2")
    genera: List[int] = Field(default_factory=lambda: [2], description="Genera g >= 2")
    ns: List[int] = Field(default_factory=lambda: [4], description="Section counts N > r")
    degree_residues: Optional[List[int]] = Field(default=None, description="d mod r; all units when omitted")
    monomial_weights: List[int] = Field(default_factory=lambda: [0], description="Include every a-bar monomial of these weights")
    polynomials: List[Dict[str, Any]] = Field(default_factory=list, description="Explicit polynomial documents")
    random_count: int = Field(default=0, ge=0, description="Random homogeneous P per rank")
    random_max_weight: int = Field(default=4, ge=0)
    seed: int = Field(default=0)

    @field_validator("ranks")
    @classmethod
    def _ranks(cls, values: List[int]) -> List[int]:
        if any(r < 2 for r in values):
            raise ValueError("ranks must be at least 2")
        return values

    @field_validator("genera")
    @classmethod
    def _genera(cls, values: List[int]) -> List[int]:
        if any(g < 2 for g in values):
            raise ValueError("genera must be at least 2")
        return values


@dataclass(frozen=True)
class GridCase:
    """One grid point; problem is None when the degree bookkeeping has no solution"""

    r: int
    d: int
    g: int
    N: int
    P: AClassPoly
    problem: Optional[QuotProblem]
    reason: str = ""

    def describe(self) -> Dict[str, Any]:
        if self.problem is not None:
            return self.problem.describe()
        return {"r": self.r, "d": self.d, "g": self.g, "N": self.N, "P": repr(self.P)}


def monomials_of_weight(r: int, weight: int) -> List[AClassPoly]:
    """All monomials a-bar_2^e_2 ... a-bar_r^e_r with sum i e_i = weight"""
    out: List[AClassPoly] = []

    def extend(index: int, remaining: int, exps: Tuple[int, ...]) -> None:
        if index > r:
            if remaining == 0:
                out.append(AClassPoly(r, {exps: 1}))
            return
        for e in range(remaining // index + 1):
            extend(index + 1, remaining - e * index, exps + (e,))

    extend(2, weight, ())
    return out


def random_homogeneous(r: int, rng: random.Random, max_weight: int) -> AClassPoly:
    """Random nonzero homogeneous polynomial with small integer coefficients"""
    weights = [w for w in range(max_weight + 1) if monomials_of_weight(r, w)]
    weight = rng.choice(weights)
    candidates = monomials_of_weight(r, weight)
    chosen = rng.sample(candidates, rng.randint(1, len(candidates)))
    total = AClassPoly(r)
    for mono in chosen:
        total = total + mono * Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2, 3]))
    return total if not total.is_zero() else candidates[0]


def grid_polynomials(spec: GridSpec, r: int) -> List[AClassPoly]:
    polys: List[AClassPoly] = []
    for weight in spec.monomial_weights:
        polys.extend(monomials_of_weight(r, weight))
    for document in spec.polynomials:
        poly = parse_polynomial(document)
        if poly.rank == r and poly.normalized:
            polys.append(poly)
    rng = random.Random(spec.seed * 1009 + r)
    for _ in range(spec.random_count):
        polys.append(random_homogeneous(r, rng, spec.random_max_weight))
    return polys


def iter_cases(spec: GridSpec) -> Iterator[GridCase]:
    """Grid points in a fixed order; degrees are lifted within their class until M >= 0"""
    for r in spec.ranks:
        residues = spec.degree_residues or [d for d in range(1, r) if gcd(d, r) == 1]
        polys = grid_polynomials(spec, r)
        for g in spec.genera:
            for N in spec.ns:
                if N <= r:
                    continue
                for d0 in residues:
                    if gcd(d0, r) != 1:
                        continue
                    for P in polys:
                        weight = weighted_degree(P).value
                        try:
                            d = admissible_degree(r, d0, g, N, weight)
                            yield GridCase(r, d, g, N, P, build_problem(r, d, g, N, P))
                        except InputError as exc:
                            yield GridCase(r, d0, g, N, P, None, exc.message)
