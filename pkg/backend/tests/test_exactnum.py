"""
Test cases for exact scalars
Rationals, cyclotomic field arithmetic and BigComplex evaluation
"""
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Poly, Rational, cyclotomic_poly, symbols

from src.core.errors import (
    DivisionByZero,
    InputError,
    NonIntegerResult,
    NotRational,
    OrderMismatch,
    OutOfRange,
)
from src.exactnum import (
    BigComplex,
    CycloNum,
    complex_eval,
    cyclo_inverse,
    cyclo_to_rational,
    cyclotomic_polynomial,
    euler_phi,
    format_rational,
    parse_rational,
    require_integer,
)

small_fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)
orders = st.sampled_from([3, 4, 5, 6, 7, 8, 9, 10, 12])


def cyclo_elements(order_strategy=orders):
    return order_strategy.flatmap(
        lambda n: st.lists(small_fractions, min_size=euler_phi(n), max_size=euler_phi(n)).map(
            lambda coeffs: CycloNum(n, tuple(coeffs))
        )
    )


class TestRational:
    """Test suite for the canonical rational text form"""

    def test_parse_reduces(self):
        assert parse_rational("6/4") == Fraction(3, 2)
        assert parse_rational("-7") == Fraction(-7)
        assert parse_rational(" 0/5 ") == Fraction(0)

    @pytest.mark.parametrize("text", ["1.5", "1e3", "", "abc", "1/0"])
    def test_parse_rejects(self, text):
        with pytest.raises(InputError):
            parse_rational(text)

    def test_parse_rejects_float(self):
        with pytest.raises(InputError):
            parse_rational(0.5)

    def test_format(self):
        assert format_rational(Fraction(-3, 6)) == "-1/2"
        assert format_rational(Fraction(4)) == "4"
        assert format_rational(Fraction(0)) == "0"

    @given(small_fractions)
    def test_format_parse_inverse(self, value):
        assert parse_rational(format_rational(value)) == value

    def test_require_integer(self):
        assert require_integer(Fraction(12, 2)) == 6
        with pytest.raises(NonIntegerResult):
            require_integer(Fraction(3, 2), "chi")


class TestCyclotomicPolynomials:
    """Test suite for Phi_n and Euler's totient"""

    def test_known_polynomials(self):
        assert cyclotomic_polynomial(1) == (-1, 1)
        assert cyclotomic_polynomial(4) == (1, 0, 1)
        assert cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)
        assert cyclotomic_polynomial(6) == (1, -1, 1)

    def test_degree_is_totient(self):
        for n in range(1, 30):
            assert len(cyclotomic_polynomial(n)) - 1 == euler_phi(n)

    def test_rejects_nonpositive_order(self):
        with pytest.raises(OutOfRange):
            cyclotomic_polynomial(0)


class TestCycloNum:
    """Test suite for arithmetic in Q(zeta_N)"""

    def test_inverse_of_one_minus_zeta_order5(self):
        a = CycloNum.one(5) - CycloNum.zeta_power(5, 1)
        assert a * cyclo_inverse(a) == CycloNum.one(5)

    def test_product_matches_sympy_remainder(self):
        x = symbols("x")
        a = CycloNum.from_polynomial(7, [1, 2])
        b = CycloNum.from_polynomial(7, [Fraction(-1, 2), 0, 0, 1])
        expected = Poly((1 + 2 * x) * (x ** 3 - Rational(1, 2)), x).rem(Poly(cyclotomic_poly(7, x), x))
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(expected.all_coeffs())]
        assert list((a * b).coeffs) == coeffs + [Fraction(0)] * (6 - len(coeffs))

    def test_inverse_is_reduced(self):
        a = CycloNum.one(12) + CycloNum.zeta_power(12, 1) * 3
        inverse = a.inverse()
        assert len(inverse.coeffs) == euler_phi(12)
        assert inverse * a == CycloNum.one(12)
        assert CycloNum.from_rational(12, Fraction(2, 7)).inverse() == CycloNum.from_rational(12, Fraction(7, 2))

    def test_zeta_powers_wrap(self):
        assert CycloNum.zeta_power(7, 7) == CycloNum.one(7)
        assert CycloNum.zeta_power(7, 3) * CycloNum.zeta_power(7, 4) == CycloNum.one(7)
        assert CycloNum.zeta_power(6, -1) == CycloNum.zeta_power(6, 5)

    def test_sum_of_all_roots_is_zero(self):
        for n in (2, 3, 4, 6, 9, 12):
            total = CycloNum.zero(n)
            for k in range(n):
                total = total + CycloNum.zeta_power(n, k)
            assert total.is_zero()
            assert cyclo_to_rational(total) == 0

    def test_exponent_table_matches_powers(self):
        table = [Fraction(k + 1) for k in range(8)]
        expected = CycloNum.zero(8)
        for k, c in enumerate(table):
            expected = expected + CycloNum.zeta_power(8, k) * c
        assert CycloNum.from_exponent_table(8, table) == expected

    def test_to_rational_reports_coefficient(self):
        with pytest.raises(NotRational) as info:
            CycloNum.zeta_power(5, 1).to_rational()
        assert info.value.details["degree"] == 1

    def test_inverse_of_zero(self):
        with pytest.raises(DivisionByZero):
            CycloNum.zero(5).inverse()
        with pytest.raises(DivisionByZero):
            CycloNum.one(5) / 0

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatch):
            CycloNum.one(5) + CycloNum.one(7)

    def test_negative_power(self):
        a = CycloNum.one(9) + CycloNum.zeta_power(9, 2)
        assert a ** -2 * a ** 2 == CycloNum.one(9)

    def test_galois_conjugate_moves_zeta(self):
        assert CycloNum.zeta_power(7, 1).galois_conjugate(3) == CycloNum.zeta_power(7, 3)
        with pytest.raises(OutOfRange):
            CycloNum.one(6).galois_conjugate(2)

    def test_json_roundtrip_and_length_check(self):
        a = CycloNum.zeta_power(12, 5) * Fraction(2, 3)
        assert CycloNum.from_json(a.to_json()) == a
        with pytest.raises(InputError):
            CycloNum(5, (Fraction(1),))

    @settings(max_examples=40, deadline=None)
    @given(cyclo_elements())
    def test_nonzero_elements_invert(self, a):
        if a.is_zero():
            return
        assert a * a.inverse() == CycloNum.one(a.order)

    @settings(max_examples=40, deadline=None)
    @given(orders.flatmap(lambda n: st.tuples(st.just(n), st.lists(small_fractions, min_size=euler_phi(n), max_size=euler_phi(n)), st.lists(small_fractions, min_size=euler_phi(n), max_size=euler_phi(n)))))
    def test_multiplication_commutes_and_distributes(self, data):
        n, xs, ys = data
        a, b = CycloNum(n, tuple(xs)), CycloNum(n, tuple(ys))
        c = CycloNum.zeta_power(n, 1) + 1
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=25, deadline=None)
    @given(cyclo_elements(st.sampled_from([5, 7, 8, 9])))
    def test_galois_conjugation_is_multiplicative(self, a):
        b = CycloNum.zeta_power(a.order, 1) + 2
        assert (a * b).galois_conjugate(2 if a.order % 2 else 3) == (
            a.galois_conjugate(2 if a.order % 2 else 3) * b.galois_conjugate(2 if a.order % 2 else 3)
        )


class TestComplexEvaluation:
    """Test suite for BigComplex images of cyclotomic elements"""

    def test_zeta_evaluates_on_unit_circle(self):
        value = complex_eval(CycloNum.zeta_power(8, 1), precision=128)
        with mpmath.workprec(128):
            expected = mpmath.expjpi(mpmath.mpf(1) / 4)
            assert mpmath.fabs(value.value - expected) < mpmath.mpf(2) ** -120

    def test_rational_distance(self):
        value = complex_eval(CycloNum.from_rational(5, Fraction(1, 3)), precision=96)
        assert value.distance(Fraction(1, 3)) < mpmath.mpf(2) ** -90

    def test_precision_floor(self):
        with pytest.raises(OutOfRange):
            complex_eval(CycloNum.one(5), precision=32)

    def test_bigcomplex_arithmetic_uses_lower_precision(self):
        a = BigComplex.from_value(Fraction(1, 3), 128)
        b = BigComplex.from_value(2, 80)
        assert (a * b).precision == 80
        assert abs(a + b) > 2
