"""The vector field x' = P, y' = Q: validation, R_{m+1}, Darboux divisor, infinity chart, equilibria."""
from src.algebraic_points import common_zeros, projective_zeros
from src.errors import CommonFactor, DegreeTooLow, DicriticalInfinity
from src.poly import BiPoly, HomogeneousForm
from src.resultants import gcd
from src.types import DarbouxDivisor, InfinityChart, PointClass, VectorField

MIN_FIELD_DEGREE = 2


def make_field(P: BiPoly, Q: BiPoly) -> VectorField:
    """Validate (P, Q): degree m > 1 and no common nonconstant factor."""
    m = max(P.degree, Q.degree)
    if m < MIN_FIELD_DEGREE:
        raise DegreeTooLow(m)
    common = gcd(P, Q)
    if not common.is_constant:
        raise CommonFactor(common)
    return VectorField(P=P, Q=Q, m=m)


def r_infinity(field: VectorField) -> HomogeneousForm:
    """R_{m+1} = x·Q_m − y·P_m (possibly the zero form)."""
    P_m = field.P.homogeneous_part(field.m)
    Q_m = field.Q.homogeneous_part(field.m)
    R = BiPoly.x() * Q_m - BiPoly.y() * P_m
    return HomogeneousForm.of(R, field.m + 1)


def is_dicritical(field: VectorField) -> bool:
    return r_infinity(field).is_zero


def darboux_divisor(field: VectorField) -> DarbouxDivisor:
    R = r_infinity(field)
    if R.is_zero:
        raise DicriticalInfinity()
    divisor = DarbouxDivisor(points=tuple(projective_zeros(R)))
    if divisor.total != field.m + 1:
        raise ArithmeticError(f"Darboux divisor has degree {divisor.total}, expected {field.m + 1}")
    return divisor


def chart_u(poly: BiPoly, weight: int) -> BiPoly:
    """u^weight·poly(1/u, v/u), returned with (u, v) in the (x, y) slots."""
    if poly.degree > weight:
        raise ValueError(f"Weight {weight} is below the degree {poly.degree}")
    return BiPoly({(weight - i - j, j): c for (i, j), c in poly.terms.items()})


def chart_vertical(poly: BiPoly, weight: int) -> BiPoly:
    """w^weight·poly(x/w, 1/w): the chart around [0:1:0], with (x, w) in the (x, y) slots."""
    if poly.degree > weight:
        raise ValueError(f"Weight {weight} is below the degree {poly.degree}")
    return BiPoly({(i, weight - i - j): c for (i, j), c in poly.terms.items()})


def infinity_chart(field: VectorField, f: BiPoly | None = None, k: BiPoly | None = None) -> InfinityChart:
    """
    The field and optional curve/cofactor in the chart u = 1/x, v = y/x.

    A = −u^{m+1}·P(1/u, v/u)
    B = u^m·[Q(1/u, v/u) − v·P(1/u, v/u)]
    F = u^n·f(1/u, v/u)
    K = u^{m−1}·k(1/u, v/u) − n·u^m·P(1/u, v/u)
    """
    m = field.m
    A = -chart_u(field.P, m + 1)
    B = chart_u(field.Q, m) - BiPoly.y() * chart_u(field.P, m)
    F = chart_u(f, f.degree) if f is not None else None
    K = None
    if k is not None:
        if f is None:
            raise ValueError("The chart cofactor K needs the curve f")
        K = chart_u(k, m - 1) - chart_u(field.P, m) * f.degree
    return InfinityChart(A=A, B=B, F=F, K=K)


def finite_equilibria(field: VectorField) -> list[PointClass]:
    """All common zeros of P and Q; at most m² points by Bézout."""
    classes = common_zeros([field.P, field.Q])
    total = sum(pc.size for pc in classes)
    if total > field.m ** 2:
        raise ArithmeticError(f"Found {total} equilibria, more than m² = {field.m ** 2}")
    return classes
