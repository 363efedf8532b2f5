"""Singular points of a plane curve and of its projective closure."""
from src.algebraic_points import (
    common_zeros,
    describe_class,
    point_class_key,
    point_coordinates,
    projective_zeros,
)
from src.errors import NonReducedCurve
from src.poly import BiPoly, HomogeneousForm, UniPoly, format_rational
from src.resultants import gcd_many
from src.types import PointClass, SingularLocation
from src.vector_field import chart_u, chart_vertical

AFFINE = "affine"
INFINITY_U = "infinity-u"
INFINITY_Y = "infinity-y"

_U_FACTOR = UniPoly([0, 1])


def check_reduced(f: BiPoly) -> None:
    """Raise NonReducedCurve when f has a repeated factor."""
    if f.is_constant:
        raise ValueError(f"Curve must be nonconstant, got {f}")
    common = gcd_many([f, f.diff("x"), f.diff("y")])
    if not common.is_constant:
        raise NonReducedCurve(common)


def affine_singular_classes(f: BiPoly) -> list[PointClass]:
    check_reduced(f)
    if f.degree <= 1:
        return []
    return common_zeros([f, f.diff("x"), f.diff("y")])


def infinity_singular_locations(f: BiPoly) -> list[SingularLocation]:
    """
    Singular points of the closure on the line at infinity.

    With F(X, Y, Z) the homogenization, these are the common zeros of ∂f_n/∂x,
    ∂f_n/∂y and f_{n−1} on Z = 0.
    """
    n = f.degree
    if n <= 1:
        return []
    f_n = f.homogeneous_part(n)
    f_n1 = f.homogeneous_part(n - 1)
    forms = [f_n.diff("x"), f_n.diff("y"), f_n1]
    h = gcd_many([p for p in forms if not p.is_zero])
    if h.is_constant:
        return []
    locations: list[SingularLocation] = []
    for point in projective_zeros(HomogeneousForm.of(h)):
        if point.coords is not None and point.coords[0] == 0:
            locations.append(SingularLocation(INFINITY_Y, PointClass(_U_FACTOR, UniPoly([0, 1]))))
        elif point.coords is not None:
            v0 = point.coords[1]
            locations.append(SingularLocation(INFINITY_U, PointClass(_U_FACTOR, UniPoly([-v0, 1]))))
        else:
            locations.append(SingularLocation(INFINITY_U, PointClass(_U_FACTOR, point.factor)))
    return locations


def singular_points(f: BiPoly) -> list[SingularLocation]:
    """Affine singular classes, then those at infinity; rational points exact."""
    affine = [SingularLocation(AFFINE, pc) for pc in affine_singular_classes(f)]
    return affine + sorted(infinity_singular_locations(f), key=lambda loc: (loc.chart, point_class_key(loc.point)))


def local_equation(f: BiPoly, location: SingularLocation) -> BiPoly:
    """The curve in the chart that contains the location."""
    if location.chart == AFFINE:
        return f
    if location.chart == INFINITY_U:
        return chart_u(f, f.degree)
    return chart_vertical(f, f.degree)


def local_equation_at_origin(f: BiPoly, location: SingularLocation) -> BiPoly | None:
    """The local equation translated so the point sits at the origin; None for towers."""
    coords = point_coordinates(location.point)
    if coords is None:
        return None
    x0, y0 = coords
    return local_equation(f, location).translate(x0, y0)


def describe_location(location: SingularLocation) -> str:
    pc = location.point
    if location.chart == AFFINE:
        return describe_class(pc)
    if location.chart == INFINITY_Y:
        return "[0:1:0]"
    if pc.y_factor.degree == 1:
        return f"[1:{format_rational(-pc.y_factor.monic()[0])}:0]"
    return f"[1:v:0], {pc.y_factor.to_text('v')} = 0"

