from .mpoly import MPoly
from .aclass import AClassPoly, WeightedDegree, load_polynomial, parse_polynomial, weighted_degree
from .symmetric import aclass_to_chern, elementary_symmetric, is_symmetric, is_translation_invariant, normalized_variables
from .series import (
    IterLaurent,
    SeriesContext,
    UnivariateSeries,
    ahat_factor_series,
    cone_degrees,
    cone_reciprocal,
    exp_series,
    inner_residue,
    iterated_residue,
    reciprocal_expm1_series,
)
from .segre import segre_leading_coefficient

__all__ = [
    "MPoly",
    "AClassPoly",
    "WeightedDegree",
    "load_polynomial",
    "parse_polynomial",
    "weighted_degree",
    "aclass_to_chern",
    "elementary_symmetric",
    "is_symmetric",
    "is_translation_invariant",
    "normalized_variables",
    "IterLaurent",
    "SeriesContext",
    "UnivariateSeries",
    "ahat_factor_series",
    "cone_degrees",
    "cone_reciprocal",
    "exp_series",
    "inner_residue",
    "iterated_residue",
    "reciprocal_expm1_series",
    "segre_leading_coefficient",
]
