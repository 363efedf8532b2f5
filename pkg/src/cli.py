"""Command-line front end: analyze, verify, search and genus reports for a system file."""
import argparse
import sys
from dataclasses import replace
from pathlib import Path

from src.certify import (
    chart_consistency,
    check_theorem1,
    check_theorem4,
    compute_cofactor,
    invariance_residual,
)
from src.config_loader import DEFAULT_CONFIG_PATH, load_config, parse_bound_rule
from src.errors import (
    CommonFactor,
    DegreeTooLow,
    DicriticalInfinity,
    NonReducedCurve,
    PolynomialSyntaxError,
    SystemFileError,
    UncertifiedGenus,
)
from src.genus import (
    classify_infinity,
    degree_bound_checks,
    genus,
    genus_bound_check,
    ramification_report,
    sing_count_check,
)
from src.report import (
    build_analyze_report,
    build_genus_entry,
    build_header,
    build_search_report,
    build_verify_entry,
    render_json,
    render_text,
)
from src.search import degree_bound, nodal_degree_bound, search_curves
from src.singularities import singular_points
from src.system_file import load_system_file
from src.types import (
    FAILS,
    HOLDS,
    NOT_APPLICABLE,
    AnalysisConfig,
    SearchConfig,
    SystemFile,
    Verdict,
    VectorField,
)
from src.vector_field import darboux_divisor, finite_equilibria, infinity_chart, make_field, r_infinity

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_UNAVAILABLE = 4

COMMANDS = ("analyze", "verify", "search", "genus")
CHART_VARS = ("u", "v")


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        report = run_command(args)
    except (PolynomialSyntaxError, SystemFileError, FileNotFoundError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DegreeTooLow, CommonFactor, NonReducedCurve) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except DicriticalInfinity as exc:
        print(f"search unavailable: {exc}; supply certificates with 'verify' instead", file=sys.stderr)
        return EXIT_UNAVAILABLE
    print(render_json(report) if args.json else render_text(report))
    return EXIT_OK


def run_command(args: argparse.Namespace) -> dict:
    verbose = args.verbose
    _progress(verbose, f"Reading {args.file}...")
    system = load_system_file(args.file, require_field=args.command != "genus")
    config = resolve_config(args, system)
    header = build_header(args.command, system, config)
    if args.command == "analyze":
        return cmd_analyze(system, header, verbose)
    if args.command == "verify":
        return cmd_verify(system, config, header, verbose)
    if args.command == "search":
        return cmd_search(system, config, header, verbose)
    return cmd_genus(system, config, header, verbose)


def resolve_config(args: argparse.Namespace, system: SystemFile) -> AnalysisConfig:
    """CLI flag > system file > config.yaml > built-in default."""
    config = load_config(args.config)
    for key in ("max_degree", "bound_rule", "shear_seed"):
        from_file = getattr(system, key)
        if from_file is not None:
            config = replace(config, **{key: from_file})
        from_flag = getattr(args, key)
        if from_flag is not None:
            config = replace(config, **{key: from_flag})
    return config


def cmd_analyze(system: SystemFile, header: dict, verbose: bool = False) -> dict:
    field = make_field(system.P, system.Q)
    _progress(verbose, f"Field of degree m = {field.m}; computing infinity data...")
    R = r_infinity(field)
    divisor = None if R.is_zero else darboux_divisor(field)
    chart = infinity_chart(field)
    chart_data = {
        "A": chart.A.to_text(CHART_VARS),
        "B": chart.B.to_text(CHART_VARS),
    }
    _progress(verbose, "Computing finite equilibria...")
    equilibria = finite_equilibria(field)
    return build_analyze_report(header, field.m, R, divisor, equilibria, chart_data)


def cmd_verify(system: SystemFile, config: AnalysisConfig, header: dict, verbose: bool = False) -> dict:
    if not system.curves:
        raise SystemFileError("verify needs at least one 'f = ...' line", 0)
    field = make_field(system.P, system.Q)
    rule = parse_bound_rule(config.bound_rule)
    entries = []
    for index, f in enumerate(system.curves, start=1):
        _progress(verbose, f"[curve {index}/{len(system.curves)}] {f}")
        cert = compute_cofactor(field, f)
        bounds = {
            "n": f.degree,
            "smooth": field.m + 1,
            "nodal": nodal_degree_bound(field.m),
            rule.label: degree_bound(field, rule),
        }
        if cert is None:
            verdicts = [Verdict("invariant-curve", FAILS, "P*f_x + Q*f_y is not a multiple of f")]
            entries.append(build_verify_entry(f, None, invariance_residual(field, f), verdicts, bounds))
            continue
        chart_residual = chart_consistency(cert)
        verdicts = [
            Verdict("invariant-curve", HOLDS, f"cofactor k = {cert.k}"),
            check_theorem1(field, f),
            check_theorem4(cert),
            Verdict(
                "chart-transport",
                HOLDS if chart_residual.is_zero else FAILS,
                "A*F_u + B*F_v - K*F vanishes in the chart at infinity",
                {"residual": chart_residual},
            ),
            _smooth_bound_verdict(field, f),
        ]
        entries.append(build_verify_entry(f, cert, None, verdicts, bounds))
    return {**header, "m": field.m, "curves": entries}


def cmd_search(system: SystemFile, config: AnalysisConfig, header: dict, verbose: bool = False) -> dict:
    field = make_field(system.P, system.Q)
    cfg = SearchConfig(
        bound_rule=parse_bound_rule(config.bound_rule),
        max_degree=config.max_degree,
        max_branches=config.max_branches,
        workers=config.workers,
    )
    _progress(verbose, f"Searching with bound rule {cfg.bound_rule.label}...")
    report = search_curves(field, cfg, verbose=verbose)
    _progress(verbose, f"Found {len(report.certificates)} invariant curve(s).")
    return build_search_report(header, report)


def cmd_genus(system: SystemFile, config: AnalysisConfig, header: dict, verbose: bool = False) -> dict:
    if not system.curves:
        raise SystemFileError("genus needs at least one 'f = ...' line", 0)
    field = None
    if system.P is not None and system.Q is not None:
        field = make_field(system.P, system.Q)
    entries = []
    for index, f in enumerate(system.curves, start=1):
        _progress(verbose, f"[curve {index}/{len(system.curves)}] {f}: singular points...")
        report = genus(f, config.shear_seed, config.branch_depth_cap, config.max_certified_class_degree)
        infinity = classify_infinity(f)
        verdicts = _field_verdicts(field, f, report)
        ramification = None
        if report.g is not None and not report.points:
            ramification = ramification_report(f, field, config.shear_seed)
        entries.append(build_genus_entry(f, report, infinity, verdicts, ramification))
    return {**header, "m": field.m if field is not None else None, "curves": entries}


def _progress(verbose: bool, message: str) -> None:
    if verbose:
        print(message, file=sys.stderr, flush=True)


def _smooth_bound_verdict(field: VectorField, f) -> Verdict:
    values = {"n": f.degree, "bound": field.m + 1}
    if singular_points(f):
        return Verdict("smooth-degree-bound", NOT_APPLICABLE, "curve is singular", values)
    status = HOLDS if f.degree <= field.m + 1 else FAILS
    return Verdict("smooth-degree-bound", status, f"n = {f.degree} <= m + 1 = {field.m + 1}", values)


def _field_verdicts(field: VectorField | None, f, report) -> list[Verdict]:
    if field is None:
        return []
    cert = compute_cofactor(field, f)
    if cert is None:
        return [Verdict("invariant-curve", FAILS, "bounds apply to invariant curves only")]
    try:
        genus_bound_check(cert, report)
    except UncertifiedGenus:
        pass
    return [report.genus_bound, sing_count_check(f, field, report), *degree_bound_checks(cert, report)]


def _bound_rule_arg(text: str) -> str:
    try:
        parse_bound_rule(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    return text


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Invariant algebraic curves of plane polynomial vector fields")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("file", type=Path, help="System file with P, Q and optional f lines")
    parser.add_argument("--json", action="store_true", help="Emit the JSON report")
    parser.add_argument("--max-degree", dest="max_degree", type=int, default=None)
    parser.add_argument("--bound-rule", dest="bound_rule", type=_bound_rule_arg, default=None,
                        help="smooth | nodal | k:<K> | explicit:<n>")
    parser.add_argument("--shear-seed", dest="shear_seed", type=int, default=None)
    parser.add_argument("--config", type=Path, default=DEFAULT_CONFIG_PATH, help="Path to config.yaml")
    parser.add_argument("--verbose", action="store_true", help="Progress lines on stderr")
    return parser


if __name__ == "__main__":
    sys.exit(main())
