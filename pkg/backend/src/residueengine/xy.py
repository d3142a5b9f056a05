"""
Residue variables
The fractional-part form L and the X/Y change of variables with X_1 + ... + X_r = 0
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Tuple

from ..core.errors import NotCoprime, OutOfRange
from ..polyseries.mpoly import MPoly


@dataclass(frozen=True)
class LForm:
    """L = sum_i {d i / r} Y_i"""

    r: int
    d: int
    coefficients: Tuple[Fraction, ...]


def build_L_form(r: int, d: int) -> LForm:
    if r < 2:
        raise OutOfRange(f"rank must be at least 2, got {r}", r=r)
    if gcd(r, d) != 1:
        raise NotCoprime(f"gcd(r, d) = gcd({r}, {d}) != 1", r=r, d=d)
    # Fraction % 1 is the fractional part, also for negative d
    coefficients = tuple(Fraction(d * i, r) % 1 for i in range(1, r))
    return LForm(r=r, d=d, coefficients=coefficients)


@dataclass(frozen=True)
class XYSystem:
    """X_1..X_r as linear polynomials in Y_1..Y_{r-1}"""

    r: int
    X: Tuple[MPoly, ...]

    def difference(self, i: int, j: int) -> MPoly:
        """X_i - X_j (0-based indices)"""
        return self.X[i] - self.X[j]


def build_xy_system(r: int) -> XYSystem:
    """X_r = -(sum_k k Y_k) / r and X_i = X_r + Y_i + ... + Y_{r-1}"""
    if r < 2:
        raise OutOfRange(f"rank must be at least 2, got {r}", r=r)
    n = r - 1
    last = MPoly.linear([Fraction(-k, r) for k in range(1, r)])
    xs = []
    for i in range(r):
        tail = MPoly.linear([1 if k >= i else 0 for k in range(n)]) if i < n else MPoly.zero(n)
        xs.append(last + tail)
    return XYSystem(r=r, X=tuple(xs))
