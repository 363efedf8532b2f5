"""Tests for src/search.py."""
import pytest


def xy(text: str):
    from src.poly_parser import parse_poly

    return parse_poly(text)


class TestDegreeBounds:
    def test_rules_for_quadratic_field(self, e1):
        from src.search import degree_bound
        from src.types import BoundRule

        assert degree_bound(e1, BoundRule("smooth")) == 3
        assert degree_bound(e1, BoundRule("nodal")) == 6
        assert degree_bound(e1, BoundRule("k", 3)) == 7
        assert degree_bound(e1, BoundRule("k", 1)) == 5
        assert degree_bound(e1, BoundRule("explicit", 4)) == 4

    def test_k_must_be_positive(self):
        from src.search import k_bounded_degree

        with pytest.raises(ValueError, match="K must be"):
            k_bounded_degree(2, 0)

    def test_unknown_rule(self, e1):
        from src.search import degree_bound
        from src.types import BoundRule

        with pytest.raises(ValueError, match="Unknown bound rule"):
            degree_bound(e1, BoundRule("cubic"))

    def test_explicit_needs_value(self, e1):
        from src.search import degree_bound
        from src.types import BoundRule

        with pytest.raises(ValueError):
            degree_bound(e1, BoundRule("explicit"))


class TestLeadingForms:
    def test_lines(self, e1):
        from src.search import enumerate_leading_forms

        forms = enumerate_leading_forms(e1, 1)
        assert [lf.form for lf in forms] == [xy("y"), xy("x - y"), xy("x + y")]
        assert all(lf.complete for lf in forms)

    def test_conics(self, e1):
        from src.search import enumerate_leading_forms

        forms = enumerate_leading_forms(e1, 2)
        assert len(forms) == 6
        assert forms[0].form == xy("y^2")
        assert all(lf.n == 2 for lf in forms)

    def test_repeated_factor_powers(self, e2):
        from src.search import enumerate_leading_forms

        forms = enumerate_leading_forms(e2, 3)
        assert [lf.form for lf in forms] == [xy("x^3")]

    def test_dicritical_raises(self, e3):
        from src.errors import DicriticalInfinity
        from src.search import enumerate_leading_forms

        with pytest.raises(DicriticalInfinity):
            enumerate_leading_forms(e3, 1)

    def test_degree_must_be_positive(self, e1):
        from src.search import enumerate_leading_forms

        with pytest.raises(ValueError, match="Degree"):
            enumerate_leading_forms(e1, 0)


class TestSolveFromLeadingForm:
    def test_invariant_line(self, e1):
        from src.search import enumerate_leading_forms, solve_from_leading_form

        lf = enumerate_leading_forms(e1, 1)[0]
        certs = solve_from_leading_form(e1, lf)
        assert len(certs) == 1
        assert certs[0].f == xy("y")
        assert certs[0].k == xy("x + 1")

    def test_inconsistent_leading_form(self, e1):
        from src.search import enumerate_leading_forms, solve_from_leading_form

        lf = enumerate_leading_forms(e1, 1)[1]
        assert solve_from_leading_form(e1, lf) == []


class TestSearchCurves:
    def test_e1_finds_line(self, e1):
        from src.certify import verify_certificate
        from src.search import search_curves
        from src.types import BoundRule, SearchConfig

        report = search_curves(e1, SearchConfig(bound_rule=BoundRule("smooth")))
        assert report.max_degree == 3
        assert report.candidates_per_degree == {1: 3, 2: 6, 3: 10}
        assert report.certificates[0].f == xy("y")
        assert all(verify_certificate(c).holds for c in report.certificates)
        assert report.complete
        assert not report.truncated

    def test_products_of_found_curves_dropped(self, e1):
        from src.search import search_curves
        from src.types import BoundRule, SearchConfig

        report = search_curves(e1, SearchConfig(bound_rule=BoundRule("smooth")))
        assert xy("y^2") not in [c.f for c in report.certificates]

    def test_e2_first_integral_family(self, e2):
        from src.search import search_curves
        from src.types import BoundRule, SearchConfig

        report = search_curves(e2, SearchConfig(bound_rule=BoundRule("smooth"), max_degree=3))
        assert [c.f for c in report.certificates] == [xy("x^3 - y^2")]
        assert report.certificates[0].first_integral
        assert report.first_integral_families == [xy("x^3 - y^2")]

    def test_workers_do_not_change_result(self, e1):
        from src.search import search_curves
        from src.types import BoundRule, SearchConfig

        serial = search_curves(e1, SearchConfig(bound_rule=BoundRule("smooth")))
        parallel = search_curves(e1, SearchConfig(bound_rule=BoundRule("smooth"), workers=4))
        assert [c.f for c in parallel.certificates] == [c.f for c in serial.certificates]

    def test_explicit_max_degree(self, e1):
        from src.search import search_curves
        from src.types import BoundRule, SearchConfig

        report = search_curves(e1, SearchConfig(bound_rule=BoundRule("nodal"), max_degree=1))
        assert report.candidates_per_degree == {1: 3}

    @pytest.mark.parametrize("a,b,c", [(1, 2, 1), (2, 1, 1), (1, -1, 2)])
    def test_recovers_planted_cubic(self, a, b, c):
        from src.certify import same_curve
        from src.search import search_curves
        from src.types import BoundRule, SearchConfig
        from src.vector_field import make_field

        f = xy("x^3 + 3*x^2*y - 4*y^3 + x^2 + 2*x*y + y^2 - y - 2")
        field = make_field(f.scale(a) - f.diff("y").scale(c), f.scale(b) + f.diff("x").scale(c))
        report = search_curves(field, SearchConfig(bound_rule=BoundRule("explicit", 3)))
        assert any(same_curve(cert.f, f) for cert in report.certificates)
        assert report.complete

    def test_dicritical_raises(self, e3):
        from src.errors import DicriticalInfinity
        from src.search import search_curves
        from src.types import BoundRule, SearchConfig

        with pytest.raises(DicriticalInfinity):
            search_curves(e3, SearchConfig(bound_rule=BoundRule("smooth")))


class TestIntegrability:
    def _certs(self, field, count):
        from src.types import Certificate

        return [Certificate(field=field, f=xy(f"x + {i}"), k=xy("1")) for i in range(count)]

    def test_below_threshold(self, e1):
        from src.search import integrability_report
        from src.types import INCONCLUSIVE

        verdict = integrability_report(self._certs(e1, 5), 2)
        assert verdict.status == INCONCLUSIVE
        assert verdict.values == {"count": 5, "threshold": 5}

    def test_above_threshold(self, e1):
        from src.search import integrability_report
        from src.types import HOLDS

        assert integrability_report(self._certs(e1, 6), 2).status == HOLDS

    def test_duplicates_counted_once(self, e1):
        from src.search import integrability_report
        from src.types import Certificate

        certs = self._certs(e1, 5) + [Certificate(field=e1, f=xy("2*x"), k=xy("1"))]
        assert integrability_report(certs, 2).values["count"] == 5
