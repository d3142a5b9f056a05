"""
Iterated residue of a product of factors
Chooses a sound truncation bound from the factors' pole floors and certifies it by recomputation
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, Tuple

from loguru import logger

from ..core.config import get_settings
from ..core.errors import TruncationUnstable
from ..exactnum.rational import format_rational
from ..polyseries.mpoly import MPoly
from ..polyseries.series import (
    IterLaurent,
    SeriesContext,
    UnivariateSeries,
    cone_degrees,
    cone_reciprocal,
    iterated_residue,
)
from ..polyseries.series import leading_exponent


@dataclass(frozen=True)
class Factor:
    """One factor of an integrand; floor is its most negative cone degree"""

    label: str
    floor: int
    build: Callable[[SeriesContext], IterLaurent]


def poly_factor(label: str, poly: MPoly) -> Factor:
    return Factor(label, 0, lambda ctx: IterLaurent.from_mpoly(ctx, poly))


def univariate_factor(label: str, variable: str, series: Callable[[int], UnivariateSeries], floor: int = 0) -> Factor:
    return Factor(label, floor, lambda ctx: IterLaurent.from_univariate(ctx, series(ctx.T), variable))


def reciprocal_factor(label: str, form: MPoly, power: int, scale: Fraction = Fraction(1)) -> Factor:
    floor = -power * max(cone_degrees(leading_exponent(form)), default=0)
    return Factor(label, floor, lambda ctx: cone_reciprocal(form, power, ctx).scale(Fraction(scale)))


def truncation_bound(factors: Sequence[Factor]) -> int:
    """Largest cone degree any contributing term can need when the target is (-m, ..., -1)"""
    return -1 + sum(-f.floor for f in factors if f.floor < 0)


def _evaluate(variables: Tuple[str, ...], factors: Sequence[Factor], T: int) -> Fraction:
    ctx = SeriesContext(variables, T)
    product = IterLaurent.constant(ctx, Fraction(1))
    for factor in factors:
        product = product * factor.build(ctx)
        if product.is_zero():
            return Fraction(0)
    return iterated_residue(product)


def residue_of_product(
    variables: Sequence[str],
    factors: Sequence[Factor],
    certify: Optional[bool] = None,
    margin: Optional[int] = None,
) -> Tuple[Fraction, int]:
    """Res_{v_1} ... Res_{v_m} of the product, taken right to left; returns (value, bound used)"""
    settings = get_settings()
    certify = settings.certify_truncation if certify is None else certify
    margin = settings.truncation_margin if margin is None else margin
    variables = tuple(variables)

    T = truncation_bound(factors)
    value = _evaluate(variables, factors, T)
    logger.debug(f"residue over {variables} at T={T}: {format_rational(value)}")
    if certify:
        check = _evaluate(variables, factors, T + margin)
        if check != value:
            raise TruncationUnstable(
                f"residue changed from {format_rational(value)} at T={T} to {format_rational(check)} at T={T + margin}",
                bound=T,
                margin=margin,
            )
    return value, T
