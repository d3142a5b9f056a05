from .models import EvalMethod, EvalResult, RegularityCertificate, ValidityReport
from .problem import QuotProblem, admissible_degree, build_problem, expected_dimension
from .vafa_intriligator import NumericEstimate, colex_subsets, vi_evaluate, vi_evaluate_numeric, vi_summand
from .validity import validity_check

__all__ = [
    "EvalMethod",
    "EvalResult",
    "RegularityCertificate",
    "ValidityReport",
    "QuotProblem",
    "admissible_degree",
    "build_problem",
    "expected_dimension",
    "NumericEstimate",
    "colex_subsets",
    "vi_evaluate",
    "vi_evaluate_numeric",
    "vi_summand",
    "validity_check",
]
