"""Turn analysis results into report dicts and render them as JSON or text."""
import json
from dataclasses import asdict
from fractions import Fraction

from src.algebraic_points import describe_class
from src.poly import BiPoly, UniPoly, format_rational
from src.singularities import describe_location
from src.types import (
    HOLDS,
    NOT_APPLICABLE,
    AnalysisConfig,
    Certificate,
    DarbouxDivisor,
    GenusReport,
    InfinityClassification,
    PointClass,
    ProjectivePoint,
    RamificationReport,
    SearchReport,
    SingularPoint,
    SystemFile,
    Verdict,
)

SCHEMA_VERSION = 1
TOOL_NAME = "darboux-curves"
TOOL_VERSION = "0.1.0"
APPROX_DIGITS = 12


def build_header(command: str, system: SystemFile, config: AnalysisConfig) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "tool": TOOL_NAME,
        "version": TOOL_VERSION,
        "command": command,
        "input": {
            "file": system.path.name,
            "P": _poly(system.P),
            "Q": _poly(system.Q),
            "curves": [_poly(f) for f in system.curves],
            "config": asdict(config),
        },
    }


def build_analyze_report(
    header: dict,
    m: int,
    R: BiPoly,
    divisor: DarbouxDivisor | None,
    equilibria: list[PointClass],
    chart: dict,
) -> dict:
    dicritical = divisor is None
    precondition = Verdict(
        "darboux-divisor-defined",
        NOT_APPLICABLE if dicritical else HOLDS,
        "P_m/Q_m = x/y: every point at infinity is singular" if dicritical else "R_{m+1} is not identically zero",
    )
    return {
        **header,
        "m": m,
        "R": _poly(R),
        "dicritical": dicritical,
        "darboux_divisor": None if dicritical else [_projective_point(p) for p in divisor.points],
        "infinity_chart": chart,
        "equilibria": [_point_class(pc) for pc in equilibria],
        "equilibrium_count": sum(pc.size for pc in equilibria),
        "verdicts": [_verdict(precondition)],
    }


def build_verify_entry(
    curve: BiPoly,
    cert: Certificate | None,
    residual: BiPoly | None,
    verdicts: list[Verdict],
    bounds: dict,
) -> dict:
    entry = {
        "curve": _poly(curve),
        "n": curve.degree,
        "invariant": cert is not None,
        "cofactor": _poly(cert.k) if cert is not None else None,
        "first_integral": cert.first_integral if cert is not None else False,
        "irreducibility": cert.irreducibility if cert is not None else None,
        "degree_bounds": bounds,
        "verdicts": [_verdict(v) for v in verdicts],
    }
    if residual is not None:
        entry["residual"] = _poly(residual)
    return entry


def build_search_report(header: dict, search: SearchReport) -> dict:
    return {
        **header,
        "bound_rule": search.bound_rule.label,
        "max_degree": search.max_degree,
        "candidates_per_degree": {str(n): c for n, c in sorted(search.candidates_per_degree.items())},
        "certificates": [_certificate(c) for c in search.certificates],
        "first_integral_families": [f"{_poly(f)} + c" for f in search.first_integral_families],
        "complete": search.complete,
        "truncated": search.truncated,
        "verdicts": [_verdict(search.integrability)],
    }


def build_genus_entry(
    curve: BiPoly,
    genus: GenusReport,
    infinity: InfinityClassification,
    verdicts: list[Verdict],
    ramification: RamificationReport | None,
) -> dict:
    certified = genus.g is not None
    entry = {
        "curve": _poly(curve),
        "n": genus.n,
        "shear": genus.shear,
        "status": "certified" if certified else "uncertified",
        "genus": genus.g,
        "singular_points": [_singular_point(p) for p in genus.points],
        "sum_branches": genus.sum_branches,
        "infinity": {
            "points": [
                {
                    "kind": p.kind,
                    "multiplicity": p.multiplicity,
                    "point": _infinity_label(p.coords, p.factor),
                    "size": p.class_size,
                }
                for p in infinity.points
            ],
            "r": infinity.r,
            "k": infinity.k,
            "s": infinity.s,
            "sum_m": infinity.sum_m,
            "sum_l": infinity.sum_l,
        },
        "verdicts": [_verdict(v) for v in verdicts],
    }
    if ramification is not None:
        entry["ramification"] = {
            "deg_R1": ramification.deg_R1,
            "deg_R2": ramification.deg_R2,
            "verdicts": [
                _verdict(v) for v in (ramification.infinity_branching, ramification.finite_branching) if v is not None
            ],
        }
    return entry


def render_json(report: dict) -> str:
    return json.dumps(_jsonable(report), indent=2, sort_keys=True, ensure_ascii=False)


def render_text(report: dict) -> str:
    lines: list[str] = []
    _render_value(report, 0, lines)
    return "\n".join(lines)


def _poly(p: BiPoly | None) -> str | None:
    return None if p is None else p.to_text()


def _uni(u: UniPoly, var: str) -> str:
    return u.to_text(var)


def _approx(z: complex) -> list[float]:
    return [round(z.real, APPROX_DIGITS) + 0.0, round(z.imag, APPROX_DIGITS) + 0.0]


def _point_class(pc: PointClass) -> dict:
    out = {
        "point": describe_class(pc),
        "x_factor": _uni(pc.x_factor, "x"),
        "y_factor": _uni(pc.y_factor, "y"),
        "size": pc.size,
        "exact": pc.is_rational,
    }
    if pc.approx:
        out["approx"] = [{"x": _approx(x), "y": _approx(y)} for x, y in pc.approx]
    return out


def _infinity_label(coords, factor: UniPoly | None) -> str:
    if coords is not None:
        return f"[{format_rational(coords[0])}:{format_rational(coords[1])}]"
    return f"[1:z], {factor.to_text('z')} = 0"


def _projective_point(p: ProjectivePoint) -> dict:
    out = {
        "point": _infinity_label(p.coords, p.factor),
        "multiplicity": p.multiplicity,
        "size": p.class_size,
    }
    if p.approx:
        out["approx"] = [_approx(z) for z in p.approx]
    return out


def _certificate(cert: Certificate) -> dict:
    return {
        "f": _poly(cert.f),
        "k": _poly(cert.k),
        "n": cert.n,
        "first_integral": cert.first_integral,
        "irreducibility": cert.irreducibility,
    }


def _singular_point(p: SingularPoint) -> dict:
    return {
        "point": describe_location(p.location),
        "chart": p.location.chart,
        "size": p.size,
        "certified": p.certified,
        "multiplicity": p.multiplicity,
        "int_number": p.int_number,
        "nu": p.nu,
        "branches": p.branches,
        "delta_std": p.delta_std,
        "delta_alt": p.delta_alt,
        "note": p.note,
    }


def _verdict(v: Verdict) -> dict:
    return {"name": v.name, "status": v.status, "detail": v.detail, "values": v.values}


def _jsonable(value):
    if isinstance(value, bool) or value is None or isinstance(value, (int, str, float)):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, BiPoly):
        return value.to_text()
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def _render_value(value, indent: int, lines: list[str]) -> None:
    pad = "  " * indent
    value = _jsonable(value)
    if isinstance(value, dict):
        for key in sorted(value):
            item = value[key]
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                _render_value(item, indent + 1, lines)
            else:
                lines.append(f"{pad}{key}: {_scalar(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}-")
                _render_value(item, indent + 1, lines)
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")


def _scalar(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (dict, list)):
        return "none"
    return str(value)
