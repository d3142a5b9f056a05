from .rational import format_rational, parse_rational, require_integer
from .cyclotomic import (
    CycloNum,
    complex_eval,
    cyclo_inverse,
    cyclo_to_rational,
    cyclotomic_polynomial,
    euler_phi,
)
from .bigcomplex import BigComplex

__all__ = [
    "format_rational",
    "parse_rational",
    "require_integer",
    "CycloNum",
    "complex_eval",
    "cyclo_inverse",
    "cyclo_to_rational",
    "cyclotomic_polynomial",
    "euler_phi",
    "BigComplex",
]
