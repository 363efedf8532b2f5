"""Search for invariant algebraic curves: degree bounds, leading forms from the Darboux divisor, descending linear solves."""
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import combinations_with_replacement
from math import isqrt

from src.certify import irreducibility_status, leading_cofactor, verify_certificate
from src.errors import DicriticalInfinity
from src.linear_solver import nullspace, reduce_rhs, row_reduce
from src.poly import BiPoly, HomogeneousForm, exact_divide, factor_linear_rational, to_sympy_poly
from src.types import (
    HOLDS,
    INCONCLUSIVE,
    BoundRule,
    Certificate,
    LeadingForm,
    SearchConfig,
    SearchReport,
    Verdict,
    VectorField,
)
from src.vector_field import r_infinity

BOUND_RULES = ("smooth", "nodal", "k", "explicit")


def k_bounded_degree(m: int, k: int) -> int:
    """floor((4 + 2m + K + sqrt((4 + 2m + K)² + 16·K·m²)) / 4)."""
    if k < 1:
        raise ValueError(f"K must be >= 1, got {k}")
    a = 4 + 2 * m + k
    return (a + isqrt(a * a + 16 * k * m * m)) // 4


def nodal_degree_bound(m: int) -> int:
    return 2 * (m + 1)


def degree_bound(field: VectorField, rule: BoundRule) -> int:
    m = field.m
    if rule.kind == "smooth":
        return m + 1
    if rule.kind == "nodal":
        return nodal_degree_bound(m)
    if rule.kind == "k":
        if rule.value is None:
            raise ValueError("The k bound rule needs a value")
        return k_bounded_degree(m, rule.value)
    if rule.kind == "explicit":
        if rule.value is None or rule.value < 1:
            raise ValueError(f"Explicit degree bound must be >= 1, got {rule.value}")
        return rule.value
    raise ValueError(f"Unknown bound rule '{rule.kind}', expected one of {BOUND_RULES}")


def enumerate_leading_forms(field: VectorField, n: int) -> list[LeadingForm]:
    """Every product of n rational linear factors of R_{m+1}, taken with repetition, in lexicographic order."""
    if n < 1:
        raise ValueError(f"Degree must be >= 1, got {n}")
    R = r_infinity(field)
    if R.is_zero:
        raise DicriticalInfinity()
    factors, remainder = factor_linear_rational(R)
    complete = remainder.form_degree == 0
    linear = [form for form, _ in factors]
    forms = []
    for combo in combinations_with_replacement(range(len(linear)), n):
        counts = [(linear[i], combo.count(i)) for i in sorted(set(combo))]
        product = BiPoly.constant(1)
        for form, mult in counts:
            product = product * form ** mult
        forms.append(LeadingForm(factors=tuple(counts), form=HomogeneousForm.of(product, n), complete=complete))
    return forms


def solve_from_leading_form(field: VectorField, lf: LeadingForm, max_branches: int = 256) -> list[Certificate]:
    certificates, _ = _solve(field, lf, max_branches)
    return certificates


def search_curves(field: VectorField, cfg: SearchConfig, verbose: bool = False) -> SearchReport:
    R = r_infinity(field)
    if R.is_zero:
        raise DicriticalInfinity()
    max_degree = cfg.max_degree if cfg.max_degree is not None else degree_bound(field, cfg.bound_rule)
    if max_degree < 1:
        raise ValueError(f"max_degree must be >= 1, got {max_degree}")
    _, remainder = factor_linear_rational(R)

    found: list[Certificate] = []
    candidates: dict[int, int] = {}
    truncated = False
    for n in range(1, max_degree + 1):
        forms = enumerate_leading_forms(field, n)
        candidates[n] = len(forms)
        if verbose:
            print(f"  degree {n}: {len(forms)} leading form(s)", file=sys.stderr, flush=True)
        for certs, cut in _solve_all(field, forms, cfg):
            found.extend(certs)
            truncated = truncated or cut

    certificates, families = _deduplicate(found)
    for cert in certificates:
        if not verify_certificate(cert).holds:
            raise ArithmeticError(f"Certificate for {cert.f} failed re-verification")
    return SearchReport(
        certificates=certificates,
        candidates_per_degree=candidates,
        complete=remainder.form_degree == 0 and not truncated,
        max_degree=max_degree,
        bound_rule=cfg.bound_rule,
        integrability=integrability_report(certificates, field.m),
        first_integral_families=families,
        truncated=truncated,
    )


def integrability_report(certs: list[Certificate], m: int) -> Verdict:
    """More than 2 + m(m+1)/2 invariant curves guarantee a rational first integral."""
    count = len({cert.f.monic() for cert in certs})
    threshold = 2 + m * (m + 1) // 2
    values = {"count": count, "threshold": threshold}
    if count > threshold:
        return Verdict("rational-first-integral", HOLDS,
                       f"{count} invariant curves > {threshold}: rational first integral exists", values)
    return Verdict("rational-first-integral", INCONCLUSIVE,
                   f"{count} invariant curve(s), need more than {threshold}", values)


def _solve_all(field: VectorField, forms: list[LeadingForm], cfg: SearchConfig) -> list[tuple[list[Certificate], bool]]:
    if cfg.workers <= 1 or len(forms) <= 1:
        return [_solve(field, lf, cfg.max_branches) for lf in forms]
    with ThreadPoolExecutor(max_workers=cfg.workers) as executor:
        return list(executor.map(lambda lf: _solve(field, lf, cfg.max_branches), forms))


def _monomials(degree: int) -> list[BiPoly]:
    if degree < 0:
        return []
    return [BiPoly.monomial(i, degree - i) for i in range(degree, -1, -1)]


def _solve(field: VectorField, lf: LeadingForm, max_branches: int) -> tuple[list[Certificate], bool]:
    """
    Fix f_n and k_{m−1}, then descend through the homogeneous components of
    P·f_x + Q·f_y − k·f = 0. Step s solves for f_{n−s} and k_{m−1−s}. Free directions
    of a step enter as fresh parameters; compatibility rows that involve parameters
    are collected as polynomial conditions and solved once the descent reaches degree 0.
    """
    import sympy

    f_n = lf.form
    k_top = leading_cofactor(field, f_n)
    if k_top is None:
        return [], False
    n, m = lf.n, field.m
    P_m = field.P.homogeneous_part(m)
    Q_m = field.Q.homogeneous_part(m)
    (P, Q, f, k), _ = to_sympy_poly([field.P, field.Q, BiPoly(dict(f_n.terms)), BiPoly(dict(k_top.terms))])
    X, Y = P.gens
    P, Q, f, k = P.as_expr(), Q.as_expr(), f.as_expr(), k.as_expr()

    params: list = []
    conditions: list = []
    for s in range(1, n + m):
        d = n + m - 1 - s
        f_unknowns = _monomials(n - s)
        k_unknowns = _monomials(m - 1 - s)
        columns = [P_m * e.diff("x") + Q_m * e.diff("y") - k_top * e for e in f_unknowns]
        columns += [-(e * f_n) for e in k_unknowns]

        residual = sympy.Poly(sympy.expand(P * f.diff(X) + Q * f.diff(Y) - k * f), X, Y)
        rhs = [-residual.coeff_monomial(X ** i * Y ** (d - i)) for i in range(d + 1)]
        if not columns:
            leftover = rhs
        else:
            reduction = row_reduce([[col.coefficient(i, d - i) for col in columns] for i in range(d + 1)])
            values, leftover = reduce_rhs(reduction, rhs)
            vector = [sympy.Integer(0)] * len(columns)
            for p, value in zip(reduction.pivots, values):
                vector[p] = value
            for basis in nullspace(reduction):
                t = sympy.Symbol(f"t{len(params)}")
                params.append(t)
                vector = [a + _rational(b) * t for a, b in zip(vector, basis)]
            f = f + sum(c * _expr(e) for c, e in zip(vector, f_unknowns))
            k = k + sum(c * _expr(e) for c, e in zip(vector[len(f_unknowns):], k_unknowns))
        for condition in leftover:
            condition = sympy.expand(condition)
            if condition == 0:
                continue
            if not condition.free_symbols:
                return [], False
            conditions.append(condition)

    truncated = False
    if not conditions:
        solutions = [{}]
    else:
        try:
            solutions = sympy.solve(conditions, params, dict=True)
        except NotImplementedError:
            return [], True
    if len(solutions) > max_branches:
        solutions = solutions[:max_branches]
        truncated = True

    certificates = []
    seen = set()
    for solution in solutions:
        f_sol = sympy.expand(f.subs(solution))
        k_sol = sympy.expand(k.subs(solution))
        free = sorted((f_sol.free_symbols | k_sol.free_symbols) - {X, Y}, key=lambda t: t.name)
        for assignment in _representatives(free):
            pair = _rational_bipoly(f_sol.subs(assignment), X, Y), _rational_bipoly(k_sol.subs(assignment), X, Y)
            if None in pair or pair in seen:
                continue
            seen.add(pair)
            cert = Certificate(field=field, f=pair[0], k=pair[1], irreducibility=irreducibility_status(pair[0]))
            if verify_certificate(cert).holds:
                certificates.append(cert)
    return certificates, truncated


def _representatives(free: list) -> list[dict]:
    """Every parameter at 0, then each parameter alone at 1."""
    zero = {t: 0 for t in free}
    return [zero] + [{**zero, t: 1} for t in free]


def _rational(c: Fraction):
    import sympy

    return sympy.Rational(c.numerator, c.denominator)


def _expr(e: BiPoly):
    (p,), _ = to_sympy_poly([e])
    return p.as_expr()


def _rational_bipoly(expr, X, Y) -> BiPoly | None:
    """The polynomial as a BiPoly, or None when a coefficient is not rational."""
    import sympy

    poly = sympy.Poly(sympy.expand(expr), X, Y)
    terms = {}
    for (i, j), c in poly.terms():
        if not c.is_Rational:
            return None
        terms[(i, j)] = Fraction(int(c.p), int(c.q))
    return BiPoly(terms)


def _deduplicate(certs: list[Certificate]) -> tuple[list[Certificate], list[BiPoly]]:
    """Monic curves, one member per f + c family of first integrals, no products of earlier findings."""
    by_curve: dict[BiPoly, Certificate] = {}
    for cert in certs:
        f = cert.f.monic()
        if f not in by_curve:
            by_curve[f] = Certificate(field=cert.field, f=f, k=cert.k, irreducibility=cert.irreducibility)
    ordered = sorted(by_curve.values(), key=lambda c: (c.n, c.f.sort_key()))

    groups: dict[BiPoly, list[Certificate]] = {}
    for cert in ordered:
        if cert.k.is_zero:
            groups.setdefault(_without_constant(cert.f), []).append(cert)
    dropped = set()
    for base, members in groups.items():
        keep = next((c for c in members if c.f == base), members[0])
        dropped.update(id(c) for c in members if c is not keep)

    kept: list[Certificate] = []
    for cert in ordered:
        if id(cert) in dropped:
            continue
        if any(lower.n < cert.n and exact_divide(cert.f, lower.f) is not None for lower in kept):
            continue
        kept.append(cert)
    families = [c.f for c in kept if c.k.is_zero and len(groups[_without_constant(c.f)]) > 1]
    return kept, families


def _without_constant(f: BiPoly) -> BiPoly:
    return f - f.coefficient(0, 0)
