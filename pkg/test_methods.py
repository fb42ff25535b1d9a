"""Cross-checks between the four ways of computing linear complexity."""
import pytest

from conftest import SMALL_PAIRS
from lincomp.closed_form import lc_closed_form
from lincomp.methods import ALL_METHODS, cross_check_pair, linear_complexity, smatrix_for
from models.report_schema import MethodName
from ntheory.cyclotomy import build_context
from ntheory.residue_arith import is_primitive_root, mult_order
from utils.errors import DegreeOutOfRange, WrongOrder

BRUTE_FORCE = [MethodName.GCD, MethodName.BM, MethodName.CLOSED]


def directed(pairs):
    return [pair for p, q in pairs for pair in ((p, q), (q, p))]


class TestAgreement:
    @pytest.mark.parametrize("p,q", directed(SMALL_PAIRS))
    def test_brute_force_matches_closed_form(self, p, q):
        ctx = build_context(p, q)
        values = {method: linear_complexity(ctx, method) for method in BRUTE_FORCE}
        assert set(values.values()) == {lc_closed_form(p, q)}, values

    @pytest.mark.parametrize(
        "p,q", [pair for pair in directed(SMALL_PAIRS) if mult_order(2, pair[0] * pair[1]) <= 128]
    )
    def test_smatrix_matches_closed_form(self, p, q):
        assert linear_complexity(build_context(p, q), MethodName.SMATRIX) == lc_closed_form(p, q)

    def test_smatrix_pairs_present(self):
        degrees = {pair: mult_order(2, pair[0] * pair[1]) for pair in SMALL_PAIRS}
        assert {pair for pair, m in degrees.items() if m <= 128} == {(17, 41), (17, 73), (17, 89), (73, 89)}

    def test_registry_covers_every_method(self):
        assert set(ALL_METHODS) == set(MethodName)


class TestRootIndependence:
    def test_several_roots_for_17_41(self):
        roots = [g for g in range(2, 697) if is_primitive_root(g, 17) and is_primitive_root(g, 41)][:4]
        assert len(roots) == 4
        for g in roots:
            ctx = build_context(17, 41, g)
            assert linear_complexity(ctx, MethodName.GCD) == 696, g
            assert linear_complexity(ctx, MethodName.BM) == 696, g

    def test_other_root_for_17_73(self):
        a = build_context(17, 73, 5)
        roots = [g for g in range(6, 1241) if is_primitive_root(g, 17) and is_primitive_root(g, 73)]
        b = build_context(17, 73, roots[0])
        assert linear_complexity(a) == linear_complexity(b) == 1204


class TestPreconditions:
    def test_closed_form_needs_order_eight(self):
        with pytest.raises(WrongOrder):
            linear_complexity(build_context(17, 19), MethodName.CLOSED)

    def test_brute_force_any_order(self):
        ctx = build_context(5, 13)
        assert ctx.d == 4
        assert linear_complexity(ctx, MethodName.GCD) == linear_complexity(ctx, MethodName.BM)

    def test_smatrix_degree_limit(self):
        with pytest.raises(DegreeOutOfRange):
            smatrix_for(build_context(17, 41), max_degree=39)


class TestCrossCheckPair:
    def test_passing_report(self):
        report = cross_check_pair(17, 41, BRUTE_FORCE + [MethodName.SMATRIX])
        assert report.passed
        assert report.status == "PASS"
        assert report.forward == {"gcd": 696, "bm": 696, "closed": 696, "smatrix": 696}
        assert report.backward == report.forward
        assert report.skipped == []

    def test_same_root_both_orders(self):
        report = cross_check_pair(17, 73, [MethodName.GCD], g=5)
        assert report.g == 5
        assert report.forward == {"gcd": 1204}
        assert report.backward == {"gcd": 916}

    def test_skip_when_field_too_large(self):
        report = cross_check_pair(17, 41, [MethodName.CLOSED, MethodName.SMATRIX], max_degree=16)
        assert report.passed
        assert report.skipped == ["smatrix"]
        assert report.forward == {"closed": 696, "smatrix": None}

    def test_failure_on_wrong_order(self):
        report = cross_check_pair(17, 19, [MethodName.GCD, MethodName.CLOSED])
        assert not report.passed
        assert "closed(17,19)" in report.detail
