"""Tests for src/report.py."""
import json
from fractions import Fraction
from pathlib import Path


def xy(text: str):
    from src.poly_parser import parse_poly

    return parse_poly(text)


def make_header(command: str = "verify"):
    from src.report import build_header
    from src.types import AnalysisConfig, SystemFile

    system = SystemFile(
        path=Path("/somewhere/e2.txt"),
        P=xy("2*y"),
        Q=xy("3*x^2"),
        curves=[xy("y^2 - x^3")],
        curve_texts=["y^2 - x^3"],
    )
    return build_header(command, system, AnalysisConfig())


class TestHeader:
    def test_fields(self):
        from src.report import SCHEMA_VERSION, TOOL_NAME

        header = make_header()
        assert header["schema"] == SCHEMA_VERSION
        assert header["tool"] == TOOL_NAME
        assert header["command"] == "verify"
        assert header["input"]["file"] == "e2.txt"
        assert header["input"]["P"] == "2*y"
        assert header["input"]["curves"] == ["-x^3 + y^2"]
        assert header["input"]["config"]["bound_rule"] == "smooth"


class TestAnalyzeReport:
    def test_e2(self, e2):
        from src.report import build_analyze_report
        from src.types import HOLDS
        from src.vector_field import darboux_divisor, finite_equilibria, r_infinity

        report = build_analyze_report(
            make_header("analyze"), e2.m, r_infinity(e2), darboux_divisor(e2), finite_equilibria(e2), {}
        )
        assert report["R"] == "3*x^3"
        assert not report["dicritical"]
        [point] = report["darboux_divisor"]
        assert point["point"] == "[0:1]"
        assert point["multiplicity"] == 3
        assert report["equilibrium_count"] == 1
        assert report["equilibria"][0]["exact"]
        assert report["verdicts"][0]["status"] == HOLDS

    def test_dicritical(self, e3):
        from src.report import build_analyze_report
        from src.types import NOT_APPLICABLE
        from src.vector_field import finite_equilibria, r_infinity

        report = build_analyze_report(
            make_header("analyze"), e3.m, r_infinity(e3), None, finite_equilibria(e3), {}
        )
        assert report["dicritical"]
        assert report["darboux_divisor"] is None
        assert report["verdicts"][0]["status"] == NOT_APPLICABLE

    def test_conjugate_equilibria_carry_approximations(self, e1):
        from src.report import build_analyze_report
        from src.vector_field import darboux_divisor, finite_equilibria, r_infinity

        report = build_analyze_report(
            make_header("analyze"), e1.m, r_infinity(e1), darboux_divisor(e1), finite_equilibria(e1), {}
        )
        entry = report["equilibria"][0]
        assert entry["size"] == 2
        assert not entry["exact"]
        assert len(entry["approx"]) == 2


class TestVerifyEntry:
    def test_non_invariant_curve(self):
        from src.report import build_verify_entry

        entry = build_verify_entry(xy("x"), None, xy("y^2 + 1"), [], {"n": 1})
        assert not entry["invariant"]
        assert entry["cofactor"] is None
        assert entry["residual"] == "y^2 + 1"

    def test_invariant_curve(self, e1):
        from src.certify import compute_cofactor
        from src.report import build_verify_entry

        entry = build_verify_entry(xy("y"), compute_cofactor(e1, xy("y")), None, [], {})
        assert entry["invariant"]
        assert entry["cofactor"] == "x + 1"
        assert "residual" not in entry


class TestSearchReport:
    def test_e2(self, e2):
        from src.report import build_search_report
        from src.search import search_curves
        from src.types import BoundRule, SearchConfig

        search = search_curves(e2, SearchConfig(bound_rule=BoundRule("smooth"), max_degree=3))
        report = build_search_report(make_header("search"), search)
        assert report["bound_rule"] == "smooth"
        assert report["candidates_per_degree"] == {"1": 1, "2": 1, "3": 1}
        assert report["certificates"][0]["f"] == "x^3 - y^2"
        assert report["first_integral_families"] == ["x^3 - y^2 + c"]

    def test_rendering_is_byte_identical(self, e1):
        from src.report import build_search_report, render_json, render_text
        from src.search import search_curves
        from src.types import BoundRule, SearchConfig

        runs = [
            search_curves(e1, SearchConfig(bound_rule=BoundRule("smooth"))),
            search_curves(e1, SearchConfig(bound_rule=BoundRule("smooth"))),
            search_curves(e1, SearchConfig(bound_rule=BoundRule("smooth"), workers=4)),
        ]
        reports = [build_search_report(make_header("search"), search) for search in runs]
        assert len({render_json(report) for report in reports}) == 1
        assert len({render_text(report) for report in reports}) == 1


class TestGenusEntry:
    def test_cusp(self):
        from src.genus import classify_infinity, genus
        from src.report import build_genus_entry

        f = xy("y^2 - x^3")
        entry = build_genus_entry(f, genus(f), classify_infinity(f), [], None)
        assert entry["status"] == "certified"
        assert entry["genus"] == 0
        assert entry["singular_points"][0]["delta_std"] == 1
        assert entry["infinity"]["points"] == [{"kind": "V2", "multiplicity": 3, "point": "[0:1]", "size": 1}]
        assert "ramification" not in entry


class TestRendering:
    def test_json_is_sorted_and_stable(self):
        from src.report import render_json

        report = {"b": 1, "a": [Fraction(1, 2), xy("x + 1")], "c": None}
        text = render_json(report)
        assert text == render_json(dict(reversed(list(report.items()))))
        assert json.loads(text) == {"a": ["1/2", "x + 1"], "b": 1, "c": None}
        assert text.index('"a"') < text.index('"b"')

    def test_json_keeps_unicode(self):
        from src.report import render_json

        assert "√" in render_json({"note": "√2"})

    def test_text_scalars(self):
        from src.report import render_text

        text = render_text({"flag": True, "missing": None, "items": [1, 2], "empty": []})
        assert text.splitlines() == ["empty: none", "flag: yes", "items:", "  - 1", "  - 2", "missing: -"]

    def test_approx_clears_negative_zero(self):
        from src.report import _approx

        assert str(_approx(complex(-1e-15, -0.0))) == "[0.0, 0.0]"
