"""
Test cases for polynomials and series
Exact multivariate polynomials, class polynomials, symmetric translation, iterated Laurent series
"""
from fractions import Fraction
from math import factorial

import orjson
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import QQ, expand, symbols
from sympy.polys.rings import PolyElement

from src.core.errors import InputError, OutOfRange, PolynomialFormatError, WrongVariableOrder, ZeroForm
from src.polyseries import (
    AClassPoly,
    IterLaurent,
    MPoly,
    SeriesContext,
    aclass_to_chern,
    ahat_factor_series,
    cone_degrees,
    cone_reciprocal,
    elementary_symmetric,
    exp_series,
    inner_residue,
    is_symmetric,
    is_translation_invariant,
    iterated_residue,
    load_polynomial,
    parse_polynomial,
    reciprocal_expm1_series,
    segre_leading_coefficient,
    weighted_degree,
)
from src.polyseries.series import geometric_series

small_coefficients = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@pytest.fixture
def xy():
    return MPoly.variable(2, 0), MPoly.variable(2, 1)


class TestMPoly:
    """Test suite for sparse exact polynomials"""

    def test_square(self, xy):
        x, y = xy
        assert (x + y) ** 2 == x * x + 2 * x * y + y * y

    def test_truncated_product(self, xy):
        x, y = xy
        product = (1 + x).multiply(1 + y, max_degree=1)
        assert product == 1 + x + y

    def test_substitute_and_evaluate(self, xy):
        x, y = xy
        poly = x * x - 3 * y
        images = [MPoly.linear([1, 1]), MPoly.linear([1, -1])]
        substituted = poly.substitute(images)
        assert substituted.evaluate([Fraction(2), Fraction(5)]) == poly.evaluate([Fraction(7), Fraction(-3)])

    def test_block_degrees(self, xy):
        x, y = xy
        assert (x * x * y + y ** 3).block_degrees([0]) == (0, 2)

    def test_zero_polynomial_has_no_degree(self):
        with pytest.raises(InputError):
            MPoly.zero(3).total_degree()

    def test_homogeneous_components(self, xy):
        x, y = xy
        parts = (1 + x + x * y).homogeneous_components()
        assert sorted(parts) == [0, 1, 2]
        assert parts[2] == x * y

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.integers(-5, 5), min_size=3, max_size=3), st.lists(st.integers(-5, 5), min_size=3, max_size=3))
    def test_evaluation_is_a_ring_map(self, a, b):
        p, q = MPoly.linear(a), MPoly.linear(b) + 1
        point = [Fraction(1, 2), Fraction(-2), Fraction(3)]
        assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)

    def test_backed_by_sympy_ring(self, xy):
        x, y = xy
        poly = (x - Fraction(1, 2) * y) ** 3
        assert isinstance(poly.element, PolyElement)
        assert poly.element.ring.domain == QQ
        x1, x2 = symbols("x1 x2")
        assert expand(poly.element.as_expr() - (x1 - x2 / 2) ** 3) == 0
        assert poly.terms[(1, 2)] == Fraction(3, 4)

    def test_truncated_power_matches_full_power(self, xy):
        x, y = xy
        full = (1 + x + 2 * y) ** 5
        assert (1 + x + 2 * y).power(5, max_degree=3) == full.truncate(3)

    def test_terms_never_store_zero(self, xy):
        x, y = xy
        assert (x + y - x).terms == {(0, 1): Fraction(1)}
        assert MPoly(2, {(1, 0): 1, (0, 1): 0}).terms == {(1, 0): Fraction(1)}
        assert hash(x + y - x) == hash(y)


class TestAClassPoly:
    """Test suite for tautological class polynomials"""

    def test_weighted_degree(self):
        assert weighted_degree(AClassPoly.monomial(2, {2: 2})).value == 4
        assert weighted_degree(AClassPoly.monomial(3, {2: 1, 3: 1})).value == 5
        assert weighted_degree(AClassPoly(3)).zero

    def test_graded_components(self):
        poly = AClassPoly.one(3) + AClassPoly.monomial(3, {3: 1}, 2)
        assert not poly.is_homogeneous()
        assert sorted(poly.graded_components()) == [0, 3]

    def test_parse_normalized(self):
        poly = parse_polynomial({"rank": 2, "vars": ["a2"], "terms": [{"exps": [2], "coeff": "1"}]})
        assert poly == AClassPoly.monomial(2, {2: 2})
        assert poly.normalized

    def test_parse_plain(self):
        poly = parse_polynomial({"rank": 2, "vars": ["a1", "a2"], "terms": [{"exps": [1, 0], "coeff": "-1/2"}]})
        assert not poly.normalized
        assert poly.terms == {(1, 0): Fraction(-1, 2)}

    @pytest.mark.parametrize("document", [
        {"rank": 2, "vars": ["b2"], "terms": []},
        {"rank": 2, "vars": ["a2"], "terms": [{"exps": [1, 1], "coeff": "1"}]},
        {"rank": 2, "vars": ["a2"], "terms": [{"exps": [1], "coeff": "0.5"}]},
        {"vars": ["a2"], "terms": []},
    ])
    def test_parse_rejects(self, document):
        with pytest.raises(PolynomialFormatError):
            parse_polynomial(document)

    def test_load_polynomial(self, tmp_path):
        path = tmp_path / "p.json"
        path.write_bytes(orjson.dumps({"rank": 3, "vars": ["a2", "a3"], "terms": [{"exps": [0, 1], "coeff": "3"}]}))
        assert load_polynomial(path) == AClassPoly.monomial(3, {3: 1}, 3)
        (tmp_path / "bad.json").write_text("{not json")
        with pytest.raises(PolynomialFormatError):
            load_polynomial(tmp_path / "bad.json")
        with pytest.raises(PolynomialFormatError):
            load_polynomial(tmp_path / "missing.json")


class TestSymmetric:
    """Test suite for the class-to-Chern-root translation"""

    def test_elementary(self):
        e2 = elementary_symmetric(2, 3)
        assert set(e2.terms) == {(1, 1, 0), (1, 0, 1), (0, 1, 1)}
        with pytest.raises(OutOfRange):
            elementary_symmetric(4, 3)

    def test_rank2_a2_is_negative_quarter_square(self):
        x1, x2 = MPoly.variable(2, 0), MPoly.variable(2, 1)
        assert aclass_to_chern(AClassPoly.monomial(2, {2: 1})) == (x1 - x2) ** 2 * Fraction(-1, 4)

    @pytest.mark.parametrize("exponents", [{2: 1}, {3: 1}, {2: 1, 3: 1}])
    def test_normalized_classes_are_symmetric_and_translation_invariant(self, exponents):
        q = aclass_to_chern(AClassPoly.monomial(3, exponents))
        assert is_symmetric(q)
        assert is_translation_invariant(q)

    def test_plain_class_is_not_translation_invariant(self):
        q = aclass_to_chern(AClassPoly.monomial(2, {1: 1}, normalized=False))
        assert is_symmetric(q)
        assert not is_translation_invariant(q)

    @pytest.mark.parametrize("rank, exponents", [(2, {2: 3}), (3, {2: 1, 3: 2}), (4, {2: 1, 4: 1}), (4, {3: 2})])
    def test_total_degree_is_weighted_degree(self, rank, exponents):
        poly = AClassPoly.monomial(rank, exponents)
        q = aclass_to_chern(poly)
        assert q.total_degree() == weighted_degree(poly).value
        assert list(q.homogeneous_components()) == [weighted_degree(poly).value]

    @settings(max_examples=25, deadline=None)
    @given(
        st.integers(2, 4).flatmap(
            lambda r: st.tuples(st.just(r), st.lists(st.integers(0, 2), min_size=r, max_size=r), st.booleans())
        )
    )
    def test_translation_is_symmetric(self, data):
        rank, powers, normalized = data
        first = 2 if normalized else 1
        exponents = {i: e for i, e in zip(range(first, rank + 1), powers) if e}
        poly = AClassPoly.monomial(rank, exponents, Fraction(3, 2), normalized=normalized)
        q = aclass_to_chern(poly)
        assert is_symmetric(q)
        assert q.total_degree() == weighted_degree(poly).value


class TestUnivariateSeries:
    """Test suite for the closed-form one-variable expansions"""

    def test_reciprocal_expm1(self):
        series = reciprocal_expm1_series(3)
        assert series.coeffs == {-1: 1, 0: Fraction(-1, 2), 1: Fraction(1, 12), 3: Fraction(-1, 720)}
        with pytest.raises(OutOfRange):
            series.coefficient(4)

    def test_ahat_factor(self):
        series = ahat_factor_series(4)
        assert series.coefficient(0) == 1
        assert series.coefficient(2) == Fraction(-1, 24)
        assert series.coefficient(4) == Fraction(7, 5760)

    def test_exp_and_geometric(self):
        assert exp_series(Fraction(2), 3).coeffs == {0: 1, 1: 2, 2: 2, 3: Fraction(4, 3)}
        assert geometric_series(Fraction(1, 2), 2).coeffs == {0: 1, 1: Fraction(1, 2), 2: Fraction(1, 4)}

    @pytest.mark.parametrize("T", [0, 3, 8])
    def test_reciprocal_expm1_times_expm1_is_one(self, T):
        series = reciprocal_expm1_series(T)
        for m in range(T + 2):
            product = sum(
                series.coefficient(k) * Fraction(1, factorial(m - k)) for k in range(-1, m)
            )
            assert product == (1 if m == 0 else 0)

    @pytest.mark.parametrize("T", [0, 4, 9])
    def test_ahat_factor_times_sinh_ratio_is_one(self, T):
        series = ahat_factor_series(T)
        sinh_ratio = {2 * n: Fraction(1, factorial(2 * n + 1) * 4 ** n) for n in range(T // 2 + 1)}
        for m in range(T + 1):
            product = sum(series.coefficient(k) * sinh_ratio.get(m - k, 0) for k in range(m + 1))
            assert product == (1 if m == 0 else 0)

    def test_ahat_factor_is_even(self):
        assert all(k % 2 == 0 for k in ahat_factor_series(11).coeffs)

    def test_exp_series_multiplies(self):
        a, b, ab = exp_series(Fraction(2, 3), 6), exp_series(Fraction(-1, 5), 6), exp_series(Fraction(7, 15), 6)
        for m in range(7):
            assert sum(a.coefficient(k) * b.coefficient(m - k) for k in range(m + 1)) == ab.coefficient(m)
        assert exp_series(Fraction(0), 4).coeffs == {0: 1}


class TestIterLaurent:
    """Test suite for cone-truncated iterated Laurent series and residues"""

    def test_cone_degrees(self):
        assert cone_degrees((1, 2, 3)) == (6, 5, 3)
        assert cone_degrees((-1, 0)) == (-1, 0)

    def test_single_variable_residue(self):
        ctx = SeriesContext(("v",), 2)
        v = MPoly.variable(1, 0)
        assert iterated_residue(cone_reciprocal(v - v * v, 1, ctx)) == 1

    def test_double_pole_residue(self):
        # Res_v e^{2v} / v^2 = 2
        ctx = SeriesContext(("v",), 3)
        series = IterLaurent.from_univariate(ctx, exp_series(Fraction(2), 3), "v") * cone_reciprocal(
            MPoly.variable(1, 0), 2, ctx
        )
        assert iterated_residue(series) == 2

    def test_two_variable_cone_expansion(self):
        ctx = SeriesContext(("v1", "v2"), 2)
        form = MPoly.linear([1, 1])
        series = cone_reciprocal(form, 1, ctx) * IterLaurent.monomial(ctx, (0, -1))
        assert series.coefficient((-1, -1)) == 1
        assert series.coefficient((-2, 0)) == -1
        assert iterated_residue(series) == 1

    def test_inner_residue_order(self):
        ctx = SeriesContext(("a", "b"), 3)
        series = IterLaurent.monomial(ctx, (1, -1), Fraction(5))
        reduced = inner_residue(series, "b")
        assert reduced.context.variables == ("a",)
        assert reduced.coefficient((1,)) == 5
        with pytest.raises(WrongVariableOrder):
            inner_residue(series, "a")

    @settings(max_examples=30, deadline=None)
    @given(small_coefficients.filter(bool), small_coefficients, st.integers(1, 3))
    def test_reciprocal_times_power_is_one(self, a, b, power):
        ctx = SeriesContext(("v1", "v2"), 3)
        form = MPoly.linear([a, b])
        product = cone_reciprocal(form, power, ctx) * IterLaurent.from_mpoly(ctx, form ** power)
        assert product.terms == {(0, 0): 1}

    @settings(max_examples=30, deadline=None)
    @given(st.dictionaries(st.tuples(st.integers(-4, 3), st.integers(-4, 3)), small_coefficients, max_size=8))
    def test_inner_residue_of_derivative_vanishes(self, terms):
        ctx = SeriesContext(("a", "b"), 6)
        derivative = IterLaurent(ctx, {(ea, eb - 1): eb * c for (ea, eb), c in terms.items()})
        assert inner_residue(derivative, "b").is_zero()
        assert iterated_residue(derivative) == 0

    def test_inner_residue_of_reciprocal_derivative_vanishes(self):
        # d/dv2 (v1 + v2)^-1 = -(v1 + v2)^-2
        ctx = SeriesContext(("v1", "v2"), 4)
        assert inner_residue(cone_reciprocal(MPoly.linear([1, 1]), 2, ctx), "v2").is_zero()

    def test_zero_form(self):
        with pytest.raises(ZeroForm):
            cone_reciprocal(MPoly.zero(1), 1, SeriesContext(("v",), 0))

    def test_form_outside_the_cone(self):
        v1, v2 = MPoly.variable(2, 0), MPoly.variable(2, 1)
        with pytest.raises(InputError):
            cone_reciprocal(v1 * v1 + v2, 1, SeriesContext(("v1", "v2"), 2))

    def test_truncation_drops_high_cone_terms(self):
        ctx = SeriesContext(("v1", "v2"), 1)
        series = IterLaurent(ctx, {(0, 2): Fraction(1), (1, 0): Fraction(1), (-3, 2): Fraction(1)})
        assert set(series.terms) == {(1, 0)}


class TestSegre:
    """Test suite for the Segre leading-coefficient lemma"""

    @pytest.mark.parametrize("s", [1, 2, 3])
    @pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
    def test_leading_coefficient(self, s, k):
        _, _, holds = segre_leading_coefficient(s, k)
        assert holds

    def test_first_order(self):
        full, leading, _ = segre_leading_coefficient(1, 1)
        assert leading == MPoly.linear([-1])
        assert full == MPoly(2, {(1, 1): -1})

    def test_rejects_bad_arguments(self):
        with pytest.raises(OutOfRange):
            segre_leading_coefficient(0, 1)
