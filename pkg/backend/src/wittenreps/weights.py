"""
Dominant weights of SU(r)
Gap-vector enumeration, the rho-shift, Weyl dimensions and central-element traces
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, List, Tuple

from ..core.errors import InputError, NonPositiveDimension, NotCoprime, OutOfRange
from ..exactnum.cyclotomic import CycloNum


@dataclass(frozen=True)
class WeightSU:
    """Highest weight chi_1 >= ... >= chi_r with integer gaps and zero sum"""

    r: int
    chi: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.chi) != self.r:
            raise InputError(f"weight needs {self.r} components, got {len(self.chi)}")
        if sum(self.chi) != 0:
            raise InputError(f"weight components must sum to zero: {self.chi}")
        for a, b in zip(self.chi, self.chi[1:]):
            gap = a - b
            if gap < 0 or gap.denominator != 1:
                raise InputError(f"weight {self.chi} is not dominant with integer gaps")

    @classmethod
    def from_gaps(cls, gaps: Tuple[int, ...]) -> "WeightSU":
        r = len(gaps) + 1
        last = Fraction(-sum((k + 1) * g for k, g in enumerate(gaps)), r)
        chi = [last] * r
        for i in range(r - 2, -1, -1):
            chi[i] = chi[i + 1] + gaps[i]
        return cls(r, tuple(chi))

    @property
    def height(self) -> int:
        return int(self.chi[0] - self.chi[-1])

    @property
    def gaps(self) -> Tuple[int, ...]:
        return tuple(int(a - b) for a, b in zip(self.chi, self.chi[1:]))

    @property
    def mu(self) -> Tuple[Fraction, ...]:
        """chi + rho with rho_i = (r - 2i + 1)/2"""
        return tuple(c + Fraction(self.r - 2 * (i + 1) + 1, 2) for i, c in enumerate(self.chi))


def _gap_vectors(length: int, budget: int) -> Iterator[Tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for head in range(budget + 1):
        for tail in _gap_vectors(length - 1, budget - head):
            yield (head,) + tail


def weights_of_height(r: int, height: int) -> List[WeightSU]:
    """One shell: gap vectors summing exactly to height, in lexicographic order"""
    return [WeightSU.from_gaps(g) for g in _gap_vectors(r - 1, height) if sum(g) == height]


def enumerate_dominant_weights(r: int, H: int) -> List[WeightSU]:
    """All dominant weights of height <= H, shell by shell"""
    if r < 2:
        raise OutOfRange(f"rank must be at least 2, got {r}", r=r)
    if H < 0:
        raise OutOfRange(f"height bound must be nonnegative, got {H}", H=H)
    out: List[WeightSU] = []
    for height in range(H + 1):
        out.extend(weights_of_height(r, height))
    return out


def weyl_dimension(weight: WeightSU) -> int:
    """prod_{i<j} (mu_i - mu_j)/(j - i)"""
    mu = weight.mu
    value = Fraction(1)
    for i in range(weight.r):
        for j in range(i + 1, weight.r):
            value *= (mu[i] - mu[j]) / (j - i)
    if value <= 0 or value.denominator != 1:
        raise NonPositiveDimension(f"Weyl dimension of {weight.chi} evaluated to {value}", value=str(value))
    return value.numerator


def central_trace(weight: WeightSU, d: int) -> CycloNum:
    """(-1)^(d(r-1)) exp(-2 pi i d mu_r) dim, as an element of Q(zeta_{2r})"""
    r = weight.r
    if gcd(r, d) != 1:
        raise NotCoprime(f"gcd(r, d) = gcd({r}, {d}) != 1", r=r, d=d)
    # exp(-2 pi i d mu_r) = zeta_{2r}^(-2 r d mu_r), and 2 r mu_r is an integer
    exponent = -2 * r * d * weight.mu[-1]
    if exponent.denominator != 1:
        raise InputError(f"mu_r = {weight.mu[-1]} does not lie in (1/2r)Z")
    sign = -1 if (d * (r - 1)) % 2 else 1
    return CycloNum.zeta_power(2 * r, int(exponent)) * (sign * weyl_dimension(weight))
