"""
Residue-path applicability
Degree-count certificates that each one-form is regular at 0 and at infinity
"""
from math import comb

from loguru import logger

from .models import RegularityCertificate, ValidityReport
from .problem import QuotProblem


def validity_check(problem: QuotProblem) -> ValidityReport:
    """Sufficient conditions for the Quot-side iterated residue to equal the VI sum"""
    r, N, gbar = problem.r, problem.N, problem.gbar
    reasons = []
    for i, mi in enumerate(problem.m, start=1):
        if not 1 <= mi <= N - 1:
            reasons.append(f"m_{i} = {mi} lies outside [1, {N - 1}]")

    certificates = []
    numerator = problem.numerator
    for k in range(1, r):
        # y_k enters x_1..x_k; pairs inside that block vanish at y_k = 0
        qmin, qmax = numerator.block_degrees(range(k))
        inner_pairs = comb(k, 2)
        crossing_pairs = k * (r - k)
        mk = problem.m[k - 1]
        order_at_zero = mk + qmin - 2 * gbar * inner_pairs
        growth = mk + qmax - 2 * gbar * (inner_pairs + crossing_pairs)
        certificate = RegularityCertificate(
            variable=k,
            order_at_zero=order_at_zero,
            growth_at_infinity=growth,
            regular_at_zero=order_at_zero >= 1,
            regular_at_infinity=growth <= N - 1,
        )
        certificates.append(certificate)
        if not certificate.regular_at_zero:
            reasons.append(f"one-form in y_{k} may have a pole at 0 (order count {order_at_zero})")
        if not certificate.regular_at_infinity:
            reasons.append(f"one-form in y_{k} may have a pole at infinity (growth count {growth} > {N - 1})")

    report = ValidityReport(valid=not reasons, m=list(problem.m), certificates=certificates, reasons=reasons)
    logger.debug(f"validity r={r} N={N} m={list(problem.m)}: valid={report.valid}")
    return report
