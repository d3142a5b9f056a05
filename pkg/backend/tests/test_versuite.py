"""
Test cases for the verification suite
Grids, cross-method equivalence, N-asymptotics, the two Verlinde paths and vanishing checks
"""
from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.core.errors import HypothesisViolated, InputError, InsufficientPoints, NotCoprime, OutOfRange
from src.polyseries import AClassPoly
from src.residueengine import verlinde_chi
from src.versuite import (
    AsymptoticVerdict,
    ComparisonStatus,
    GridSpec,
    asymptotic_extract,
    divided_differences,
    equivalence_report,
    iter_cases,
    mapcount_report,
    monomials_of_weight,
    vanishing_check,
    verlinde_mapcount,
    verlinde_ratio,
)
from src.versuite.asymptotics import leading_exponent
from src.versuite.grid import grid_polynomials
from src.versuite.verlinde_paths import mapcount_exponent


def a2(power: int = 1) -> AClassPoly:
    return AClassPoly.monomial(2, {2: power})


class TestGrid:
    """Test suite for grid generation"""

    def test_monomials_of_weight(self):
        assert monomials_of_weight(2, 4) == [a2(2)]
        assert monomials_of_weight(2, 1) == []
        assert len(monomials_of_weight(3, 6)) == 2

    def test_validation(self):
        with pytest.raises(ValidationError):
            GridSpec(ranks=[1])
        with pytest.raises(ValidationError):
            GridSpec(genera=[1])

    def test_inadmissible_cases_are_kept(self):
        cases = list(iter_cases(GridSpec(ranks=[2], genera=[2], ns=[2, 3, 4], monomial_weights=[0])))
        assert [case.N for case in cases] == [3, 4]
        assert cases[0].problem is None
        assert cases[1].problem is not None
        assert cases[1].d == 1

    def test_degrees_are_lifted(self):
        cases = list(iter_cases(GridSpec(ranks=[2], genera=[2], ns=[4], monomial_weights=[2])))
        assert cases[0].d == 3

    def test_random_polynomials_are_seeded(self):
        spec = GridSpec(ranks=[3], monomial_weights=[], random_count=4, seed=7)
        first = grid_polynomials(spec, 3)
        assert first == grid_polynomials(spec, 3)
        assert all(p.is_homogeneous() and not p.is_zero() for p in first)


class TestEquivalence:
    """Test suite for VI sums against Quot residues"""

    def test_rank2_genus2_grid(self):
        report = equivalence_report(GridSpec(ranks=[2], genera=[2], ns=[4], monomial_weights=[0, 2, 4]))
        assert report.passed
        assert report.compared == 3
        values = [entry.vi_value for entry in report.entries]
        assert values == ["24", "8", "0"]
        assert all(entry.vi_value == entry.residue_value for entry in report.entries)

    def test_odd_n_is_inadmissible_for_rank2(self):
        report = equivalence_report(GridSpec(ranks=[2], genera=[2], ns=[3, 5], monomial_weights=[0, 2]))
        assert report.passed
        assert {entry.status for entry in report.entries} == {ComparisonStatus.INADMISSIBLE}

    def test_invalid_case_reports_vi_value(self):
        report = equivalence_report(GridSpec(ranks=[2], genera=[3], ns=[4], monomial_weights=[0]))
        (entry,) = report.entries
        assert entry.status is ComparisonStatus.RESIDUE_INAPPLICABLE
        assert entry.vi_value is not None
        assert entry.residue_value is None
        assert report.passed

    def test_threads_give_identical_report(self):
        grid = GridSpec(ranks=[2], genera=[2], ns=[4, 6], monomial_weights=[0, 2])
        assert equivalence_report(grid, threads=3).model_dump() == equivalence_report(grid).model_dump()


class TestAsymptotics:
    """Test suite for leading N-coefficients"""

    def test_divided_differences(self):
        assert divided_differences([0, 1, 2], [Fraction(1), Fraction(3), Fraction(7)]) == [1, 2, 1]

    def test_leading_exponent(self):
        assert leading_exponent(2, 2, AClassPoly.one(2)) == 5
        assert leading_exponent(2, 2, a2()) == 3
        assert leading_exponent(2, 2, a2(2)) == 1

    @pytest.mark.parametrize("P,ns,target", [
        (AClassPoly.one(2), [4, 6, 8, 10, 12, 14, 16, 18, 20], "1/48"),
        (a2(), [4, 6, 8, 10, 12], "1/8"),
        (a2(2), [4, 6, 8], "0"),
    ])
    def test_interpolated_match(self, P, ns, target):
        report = asymptotic_extract(2, 1, 2, P, ns)
        assert report.target == target
        assert report.interpolated_coefficient == target
        assert report.verdict is AsymptoticVerdict.INTERPOLATED_MATCH
        assert report.passed
        assert len(report.samples) == len(ns)

    def test_ratio_sequence(self):
        report = asymptotic_extract(2, 1, 2, a2(), [4, 6, 8, 10, 12])
        assert {sample.ratio for sample in report.samples} == {"1/8"}

    def test_insufficient_points(self):
        with pytest.raises(InsufficientPoints):
            asymptotic_extract(2, 1, 2, AClassPoly.one(2), [4, 6, 8])

    def test_duplicates(self):
        with pytest.raises(InputError):
            asymptotic_extract(2, 1, 2, a2(2), [4, 4, 6, 8])


class TestVerlindePaths:
    """Test suite for map-count Verlinde numbers"""

    def test_exponent(self):
        assert mapcount_exponent(2, 1, 2, 1) == 0
        assert mapcount_exponent(2, 3, 2, 2) == 5

    @pytest.mark.parametrize("d,s,expected", [(1, 1, 6), (1, 2, 19), (3, 1, 6)])
    def test_matches_residue_path(self, d, s, expected):
        assert verlinde_mapcount(2, d, 2, s) == expected
        assert verlinde_chi(2, d, 2, s) == expected

    @pytest.mark.parametrize("r,d,g,s,expected", [(3, 1, 2, 1, 85), (2, 1, 3, 1, 28), (2, 1, 3, 2, 265)])
    def test_paths_agree_beyond_rank2_genus2(self, r, d, g, s, expected):
        assert verlinde_chi(r, d, g, s) == expected
        assert verlinde_mapcount(r, d, g, s) == expected

    def test_report_exposes_lifted_degree(self):
        report = mapcount_report(2, 1, 2, 2)
        assert report.requested_d == 1
        assert report.d == 3
        assert report.lifted
        assert (report.N, report.M) == (6, 5)
        assert report.rational == 19
        assert report.quot_method == "vi-exact"
        assert Fraction(report.quot_value) == 19 * 3 ** 2

    def test_report_without_lift(self):
        report = mapcount_report(2, 1, 2, 1, method="residue")
        assert not report.lifted
        assert report.d == 1 and report.M == 0
        assert report.rational == 6

    def test_rank3_report(self):
        report = mapcount_report(3, 1, 2, 1)
        assert report.d == 4 and report.M == 5
        assert report.model_dump(mode="json")["value"] == "85"

    def test_residue_method(self):
        assert verlinde_mapcount(2, 1, 2, 1, method="residue") == 6

    @pytest.mark.parametrize("s", [1, 2])
    def test_ratio_is_one(self, s):
        assert verlinde_ratio(2, 1, 2, s) == 1

    def test_rejects_bad_inputs(self):
        with pytest.raises(OutOfRange):
            verlinde_mapcount(2, 1, 2, 0)
        with pytest.raises(NotCoprime):
            verlinde_mapcount(2, 2, 2, 1)


class TestVanishing:
    """Test suite for the vanishing of high-degree insertions"""

    def test_large_insertion_vanishes(self):
        verdict = vanishing_check(2, 5, 2, 10, a2(2))
        assert verdict.vanishes
        assert verdict.value == "0"
        assert all(verdict.hypotheses.values())
        assert verdict.problem["M"] == 15

    def test_with_plain_insertion(self):
        S = AClassPoly.monomial(2, {1: 1}, normalized=False)
        verdict = vanishing_check(2, 3, 2, 11, a2(2), S)
        assert verdict.vanishes
        assert verdict.problem["M"] == 5

    def test_degree_bound_is_sharp(self):
        with pytest.raises(HypothesisViolated) as info:
            vanishing_check(2, 1, 2, 6, a2())
        assert "deg P > r(r-1)gbar" in info.value.details["failed"]

    def test_section_bound(self):
        with pytest.raises(HypothesisViolated) as info:
            vanishing_check(2, 3, 2, 8, a2(2))
        assert info.value.details["failed"] == ["deg P + deg S < N/r"]

    def test_zero_polynomial(self):
        with pytest.raises(InputError):
            vanishing_check(2, 5, 2, 10, AClassPoly(2))
