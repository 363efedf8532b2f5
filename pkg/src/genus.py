"""Genus, infinity classification, ramification and the degree/genus bound checks for a curve."""
from fractions import Fraction

from src.algebraic_points import point_coordinates
from src.certify import compute_cofactor
from src.errors import BranchCountInconclusive, CurveNotSmooth, ParityViolation, UncertifiedGenus
from src.local_invariants import DEFAULT_DEPTH_CAP, local_data_at_origin
from src.poly import BiPoly, format_rational
from src.resultants import resultant_y
from src.search import k_bounded_degree, nodal_degree_bound
from src.singularities import (
    AFFINE,
    affine_singular_classes,
    check_reduced,
    local_equation_at_origin,
    singular_points,
)
from src.types import (
    FAILS,
    HOLDS,
    NOT_APPLICABLE,
    UNCERTIFIED,
    Certificate,
    GenusReport,
    InfinityClassification,
    InfinityPoint,
    RamificationReport,
    SingularLocation,
    SingularPoint,
    Verdict,
    VectorField,
)
from src.vector_field import chart_vertical, r_infinity

MAX_SHEAR_TRIES = 32
DEFAULT_MAX_CLASS_DEGREE = 2


def shear(f: BiPoly, t: int) -> BiPoly:
    """f(x + t·y, y)."""
    if t == 0:
        return f
    return f.substitute(BiPoly.x() + BiPoly.y() * t, BiPoly.y())


def find_generic_shear(f: BiPoly, seed: int = 1) -> tuple[int, BiPoly, bool]:
    """
    First t ≥ seed making the sheared curve generic for the projection to x.

    Generic means: monic in y up to a constant, affine singular points with pairwise
    distinct x-coordinates, and no vertical tangent at a singular point. Returns
    (t, sheared f, found); when no t works the seed shear is returned with found=False.
    """
    for t in range(seed, seed + MAX_SHEAR_TRIES):
        candidate = shear(f, t)
        if _is_generic(candidate):
            return t, candidate, True
    return seed, shear(f, seed), False


def analyze_point(
    f: BiPoly,
    location: SingularLocation,
    depth_cap: int = DEFAULT_DEPTH_CAP,
    max_class_degree: int = DEFAULT_MAX_CLASS_DEGREE,
) -> SingularPoint:
    point = SingularPoint(location=location)
    if location.point.size > max_class_degree:
        point.note = f"conjugate class of size {location.point.size} exceeds {max_class_degree}"
        return point
    local = local_equation_at_origin(f, location)
    if local is None:
        point.note = "class needs a tower of residue fields"
        return point
    try:
        data = local_data_at_origin(local, depth_cap)
    except (BranchCountInconclusive, ParityViolation) as exc:
        point.multiplicity = local.lowest_degree()
        point.note = str(exc)
        return point
    point.multiplicity = data["multiplicity"]
    point.int_number = data["int_number"]
    point.nu = data["nu"]
    point.branches = data["branches"]
    point.delta_std = data["delta_std"]
    point.delta_alt = data["delta_alt"]
    point.certified = True
    if data["coordinate_change"] != "none":
        point.note = f"local coordinates: {data['coordinate_change']}"
    return point


def genus(
    f: BiPoly,
    shear_seed: int = 1,
    depth_cap: int = DEFAULT_DEPTH_CAP,
    max_class_degree: int = DEFAULT_MAX_CLASS_DEGREE,
) -> GenusReport:
    """g = (n−1)(n−2)/2 − Σ δ over the singular points of the projective closure."""
    check_reduced(f)
    n = f.degree
    t, sheared, _ = find_generic_shear(f, shear_seed)
    points = [
        analyze_point(sheared, loc, depth_cap, max_class_degree)
        for loc in singular_points(sheared)
    ]
    uncertified = [p for p in points if not p.certified]
    arithmetic_genus = (n - 1) * (n - 2) // 2
    if uncertified:
        return GenusReport(n=n, g=None, points=points, sum_branches=None, shear=t, uncertified_points=uncertified)
    total_delta = sum(p.size * p.delta_std for p in points)
    sum_branches = sum(p.size * p.branches for p in points)
    return GenusReport(
        n=n,
        g=arithmetic_genus - total_delta,
        points=points,
        sum_branches=sum_branches,
        shear=t,
    )


def genus_bound_check(cert: Certificate, report: GenusReport | None = None, shear_seed: int = 1) -> GenusReport:
    """2g − 2 ≤ n(m−1) − Σ |π^{−1}(X)|, both sides recorded exactly."""
    if report is None:
        report = genus(cert.f, shear_seed)
    m = cert.field.m
    report.m = m
    if report.g is None:
        report.genus_bound = Verdict("genus-bound", UNCERTIFIED, "some singular points are uncertified")
        raise UncertifiedGenus(
            f"{len(report.uncertified_points)} singular point(s) of {cert.f} are uncertified"
        )
    report.genus_rhs = report.n * (m - 1) - report.sum_branches
    lhs = 2 * report.g - 2
    status = HOLDS if lhs <= report.genus_rhs else FAILS
    report.genus_bound = Verdict(
        "genus-bound",
        status,
        f"2g - 2 = {lhs} <= n(m-1) - sum r = {report.genus_rhs}",
        {"lhs": lhs, "rhs": report.genus_rhs},
    )
    return report


def classify_infinity(f: BiPoly) -> InfinityClassification:
    """Points of the curve on the line at infinity, sorted into V1 (simple), V2 (multiple, smooth), V3."""
    from src.algebraic_points import projective_zeros

    n = f.degree
    if n < 1:
        raise ValueError(f"Curve must be nonconstant, got {f}")
    f_n = f.homogeneous_part(n)
    f_n1 = f.homogeneous_part(n - 1)
    points: list[InfinityPoint] = []
    for zero in projective_zeros(f_n):
        mult = zero.multiplicity
        if mult == 1:
            kind = "V1"
        elif zero.coords is not None and zero.coords[0] == 0:
            G = chart_vertical(f, n)
            kind = "V2" if G.coefficient(0, 1) != 0 else "V3"
        elif zero.coords is not None:
            kind = "V2" if f_n1.evaluate(Fraction(1), zero.coords[1]) != 0 else "V3"
        else:
            kind = "V3" if (f_n1.dehomogenize() % zero.factor).is_zero else "V2"
        points.append(InfinityPoint(kind=kind, multiplicity=mult, coords=zero.coords, factor=zero.factor))
    r = sum(p.class_size for p in points if p.kind == "V1")
    k = sum(p.class_size for p in points if p.kind == "V2")
    s = sum(p.class_size for p in points if p.kind == "V3")
    sum_m = sum(p.class_size * p.multiplicity for p in points if p.kind == "V2")
    sum_l = sum(p.class_size * p.multiplicity for p in points if p.kind == "V3")
    if r + sum_m + sum_l != n:
        raise ArithmeticError(f"Infinity partition r + sum m + sum l = {r + sum_m + sum_l} != n = {n}")
    return InfinityClassification(n=n, points=points, r=r, k=k, s=s, sum_m=sum_m, sum_l=sum_l)


def ramification_report(f: BiPoly, field: VectorField | None = None, shear_seed: int = 1) -> RamificationReport:
    """Branching of the projection (x, y) → x on a smooth curve, with the Riemann–Hurwitz split."""
    check_reduced(f)
    n = f.degree
    if singular_points(f):
        raise CurveNotSmooth(f"{f} has singular points")
    sheared = f
    if f.coefficient(0, n) == 0:
        _, sheared, _ = find_generic_shear(f, shear_seed)
    g = (n - 1) * (n - 2) // 2
    f_y = sheared.diff("y")
    deg_R2 = 0 if f_y.is_constant else resultant_y(sheared, f_y).degree
    deg_R1 = (2 * g - 2 + 2 * n) - deg_R2
    certified = field is not None and compute_cofactor(field, f) is not None
    values1 = {"deg_R1": deg_R1, "bound": n - 1}
    if certified:
        infinity_branching = Verdict("branching-at-infinity", HOLDS if deg_R1 <= n - 1 else FAILS,
                         f"deg R1 = {deg_R1} <= n - 1 = {n - 1}", values1)
    else:
        infinity_branching = Verdict("branching-at-infinity", NOT_APPLICABLE,
                         "bound applies to invariant curves only", values1)
    finite_branching = None
    if field is not None:
        values3 = {"deg_R2": deg_R2, "bound": field.m * n}
        if certified:
            finite_branching = Verdict("finite-branching", HOLDS if deg_R2 <= field.m * n else FAILS,
                             f"deg R2 = {deg_R2} <= mn = {field.m * n}", values3)
        else:
            finite_branching = Verdict("finite-branching", NOT_APPLICABLE, "curve is not invariant", values3)
    return RamificationReport(
        n=n, g=g, deg_R1=deg_R1, deg_R2=deg_R2,
        infinity_branching=infinity_branching, finite_branching=finite_branching,
    )


def sing_count_check(f: BiPoly, field: VectorField, report: GenusReport | None = None) -> Verdict:
    """|Sing ∩ affine| ≤ m², |Sing| ≤ m² + m + 1 when R ≢ 0, and |Sing| ≤ m² + n/2."""
    if report is None:
        affine = sum(pc.size for pc in affine_singular_classes(f))
        total = sum(loc.point.size for loc in singular_points(f))
    else:
        affine = sum(p.size for p in report.points if p.location.chart == AFFINE)
        total = sum(p.size for p in report.points)
    m, n = field.m, f.degree
    checks = {"affine <= m^2": affine <= m * m}
    if not r_infinity(field).is_zero:
        checks["total <= m^2 + m + 1"] = total <= m * m + m + 1
    checks["total <= m^2 + n/2"] = total <= m * m + Fraction(n, 2)
    status = HOLDS if all(checks.values()) else FAILS
    values = {
        "affine": affine,
        "total": total,
        "bounds": {"m^2": m * m, "m^2 + m + 1": m * m + m + 1, "m^2 + n/2": format_rational(m * m + Fraction(n, 2))},
        "checks": {name: HOLDS if ok else FAILS for name, ok in checks.items()},
    }
    return Verdict("singular-point-counts", status, f"affine {affine}, total {total}", values)


def degree_bound_checks(cert: Certificate, report: GenusReport) -> list[Verdict]:
    """Degree bounds that depend on the singularities of an invariant curve."""
    n, m = cert.n, cert.field.m
    verdicts = []

    if report.points:
        verdicts.append(Verdict("smooth-degree-bound", NOT_APPLICABLE, "curve is singular", {"n": n, "bound": m + 1}))
    else:
        verdicts.append(Verdict(
            "smooth-degree-bound", HOLDS if n <= m + 1 else FAILS,
            f"n = {n} <= m + 1 = {m + 1}", {"n": n, "bound": m + 1},
        ))

    if report.uncertified_points:
        verdicts.append(Verdict("degree-inequality", UNCERTIFIED, "some singular points are uncertified"))
        for label in ("K=1", "K=max"):
            verdicts.append(Verdict(f"intersection-sum-bound[{label}]", UNCERTIFIED,
                                    "some singular points are uncertified"))
            verdicts.append(Verdict(f"k-bounded-degree[{label}]", UNCERTIFIED, "some singular points are uncertified"))
        verdicts.append(Verdict("nodal-degree-bound", UNCERTIFIED, "some singular points are uncertified"))
        return verdicts

    sum_int = sum(p.size * p.int_number for p in report.points)
    lhs = n * (n - 3) - sum_int
    verdicts.append(Verdict(
        "degree-inequality", HOLDS if lhs <= n * (m - 1) else FAILS,
        f"n(n-3) - sum (f,f_y) = {lhs} <= n(m-1) = {n * (m - 1)}",
        {"lhs": lhs, "rhs": n * (m - 1), "sum_int_number": sum_int},
    ))

    k_max = max((p.int_number for p in report.points), default=1)
    for label, k in (("K=1", 1), ("K=max", max(k_max, 1))):
        bound = k_bounded_degree(m, k)
        hypothesis = all(p.int_number <= k for p in report.points)
        sum_rhs = k * (m * m + Fraction(n, 2))
        sum_values = {"K": k, "lhs": sum_int, "rhs": format_rational(sum_rhs), "hypothesis": hypothesis}
        if not hypothesis:
            verdicts.append(Verdict(f"intersection-sum-bound[{label}]", NOT_APPLICABLE,
                                    f"some (f, f_y)_X exceeds K = {k}", sum_values))
        else:
            verdicts.append(Verdict(
                f"intersection-sum-bound[{label}]", HOLDS if sum_int <= sum_rhs else FAILS,
                f"sum (f,f_y) = {sum_int} <= K(m^2 + n/2) = {format_rational(sum_rhs)}", sum_values,
            ))

        values = {"K": k, "n": n, "bound": bound, "hypothesis": hypothesis, "inequality": n <= bound}
        if not hypothesis:
            verdicts.append(Verdict(f"k-bounded-degree[{label}]", NOT_APPLICABLE,
                                    f"some (f, f_y)_X exceeds K = {k}", values))
        else:
            verdicts.append(Verdict(f"k-bounded-degree[{label}]", HOLDS if n <= bound else FAILS,
                                    f"n = {n} <= {bound}", values))

    nodal = all(p.multiplicity == 2 and p.branches == 2 for p in report.points)
    bound = nodal_degree_bound(m)
    if report.points and nodal:
        verdicts.append(Verdict("nodal-degree-bound", HOLDS if n <= bound else FAILS,
                                f"n = {n} <= 2(m+1) = {bound}", {"n": n, "bound": bound}))
    else:
        verdicts.append(Verdict("nodal-degree-bound", NOT_APPLICABLE,
                                "not every singular point is a node", {"n": n, "bound": bound}))
    return verdicts


def _is_generic(f: BiPoly) -> bool:
    if f.coefficient(0, f.degree) == 0:
        return False
    classes = affine_singular_classes(f)
    x_factors = set()
    for pc in classes:
        if pc.y_factor.degree != 1 or pc.x_factor in x_factors:
            return False
        x_factors.add(pc.x_factor)
    for pc in classes:
        coords = point_coordinates(pc)
        if coords is None:
            return False
        local = f.translate(*coords)
        column = [local.coefficient(0, j) for j in range(local.degree_y + 1)]
        nu = next((j for j, c in enumerate(column) if c != 0), None)
        if nu is None or nu != local.lowest_degree():
            return False
    return True
