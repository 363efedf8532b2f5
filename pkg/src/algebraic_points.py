"""Exact common zeros of bivariate systems and zeros of binary forms, as conjugate classes."""
from fractions import Fraction
from itertools import combinations

from src.errors import InfinitelyManyEquilibria
from src.poly import (
    BiPoly,
    HomogeneousForm,
    UniPoly,
    approximate_roots,
    factor_over_q,
    format_rational,
    linear_factor_root_key,
    uni_gcd,
    uni_squarefree_part,
)
from src.residue_field import ResidueField, root_of
from src.resultants import eliminate_y, gcd_many
from src.types import PointClass, ProjectivePoint

MAX_COMBINATION_TRIES = 8


def common_zeros(polys: list[BiPoly]) -> list[PointClass]:
    """All common affine zeros of `polys`, grouped by the irreducible factor of their x-coordinate."""
    nonzero = [p for p in polys if not p.is_zero]
    if not nonzero:
        raise InfinitelyManyEquilibria("Every polynomial is zero")
    if any(p.is_constant for p in nonzero):
        return []
    if len(nonzero) == 1:
        raise InfinitelyManyEquilibria(f"A single curve {nonzero[0]} has infinitely many points")

    eliminant = _x_eliminant(nonzero)
    if eliminant.degree <= 0:
        return []

    classes: list[PointClass] = []
    for q, _ in factor_over_q(eliminant):
        alpha = root_of(q, "x")
        specialized = [specialize_x(p, alpha) for p in nonzero]
        specialized = [s for s in specialized if not s.is_zero]
        if not specialized:
            raise InfinitelyManyEquilibria(f"Common vertical component over the roots of {q.to_text('x')}")
        g = UniPoly()
        for s in specialized:
            g = uni_gcd(g, s)
        if g.degree <= 0:
            continue
        g = uni_squarefree_part(g)
        if q.degree == 1:
            for y_factor, _ in factor_over_q(g):
                classes.append(_make_class(q, y_factor))
        else:
            classes.append(_make_class(q, g))
    classes.sort(key=point_class_key)
    return classes


def point_class_key(pc: PointClass) -> tuple:
    return (pc.x_factor.degree, pc.y_factor.degree, pc.x_factor.to_text("x"), pc.y_factor.to_text("y"))


def point_coordinates(pc: PointClass) -> tuple | None:
    """
    Field elements (α, β) for one representative of the class.

    Rational classes give Fractions. A class with one nonrational coordinate gives
    elements of a single residue field. Towers (both coordinates nonrational over Q
    and over Q(α)) are not representable and return None.
    """
    if pc.x_factor.degree == 1:
        alpha = root_of(pc.x_factor, "x")
        if pc.y_factor.degree == 1:
            return alpha, -pc.y_factor.monic()[0]
        return alpha, ResidueField(pc.y_factor, "y").generator()
    if pc.y_factor.degree == 1:
        alpha = root_of(pc.x_factor, "x")
        return alpha, -pc.y_factor.monic()[0]
    return None


def rational_point(pc: PointClass) -> tuple[Fraction, Fraction]:
    if not pc.is_rational:
        raise ValueError("Point class is not rational")
    return -pc.x_factor.monic()[0], -pc.y_factor.monic()[0]


def describe_class(pc: PointClass) -> str:
    if pc.is_rational:
        x0, y0 = rational_point(pc)
        return f"({format_rational(x0)}, {format_rational(y0)})"
    return f"{{{pc.x_factor.to_text('x')} = 0, {pc.y_factor.to_text('y')} = 0}}"


def projective_zeros(h: HomogeneousForm) -> list[ProjectivePoint]:
    """Zeros of a nonzero binary form on P^1 with multiplicities, exact where rational."""
    if h.is_zero:
        raise ValueError("The zero form vanishes everywhere")
    points: list[tuple[tuple, ProjectivePoint]] = []
    e = h.x_multiplicity()
    if e > 0:
        points.append((linear_factor_root_key(None), ProjectivePoint(
            multiplicity=e, coords=(Fraction(0), Fraction(1)),
        )))
    for factor, mult in factor_over_q(h.dehomogenize()):
        if factor.degree == 1:
            z0 = -factor[0]
            points.append((linear_factor_root_key(z0), ProjectivePoint(
                multiplicity=mult, coords=(Fraction(1), z0),
            )))
        else:
            points.append(((2, factor.degree, factor.to_text("z")), ProjectivePoint(
                multiplicity=mult,
                factor=factor,
                approx=tuple(approximate_roots(factor)),
            )))
    points.sort(key=lambda kp: kp[0])
    return [p for _, p in points]


def _pair_eliminant(p: BiPoly, q: BiPoly) -> UniPoly:
    if p.degree_y <= 0 and q.degree_y <= 0:
        return uni_gcd(p.as_univariate("x"), q.as_univariate("x"))
    return eliminate_y(p, q)


def _x_eliminant(polys: list[BiPoly]) -> UniPoly:
    """A nonzero polynomial in x vanishing at the x-coordinate of every common zero."""
    result = UniPoly()
    for p, q in combinations(polys, 2):
        r = _pair_eliminant(p, q)
        if not r.is_zero:
            result = uni_gcd(result, r)
    if not result.is_zero:
        return result
    common = gcd_many(polys)
    if not common.is_constant:
        raise InfinitelyManyEquilibria(f"Common component {common}")
    for shift in range(1, MAX_COMBINATION_TRIES + 1):
        h1 = sum((p * (i + 1) for i, p in enumerate(polys)), BiPoly())
        h2 = sum((p * (i + shift) ** 2 for i, p in enumerate(polys)), BiPoly())
        r = _pair_eliminant(h1, h2)
        if not r.is_zero:
            return r.monic()
    raise InfinitelyManyEquilibria("Could not eliminate y from the system")


def specialize_x(p: BiPoly, alpha) -> UniPoly:
    """p(α, y) as a polynomial in y."""
    return UniPoly(coeff.evaluate(alpha) for coeff in p.y_coefficients())


def _make_class(q: UniPoly, y_factor: UniPoly) -> PointClass:
    return PointClass(
        x_factor=q.monic(),
        y_factor=y_factor.monic(),
        approx=tuple(_approximate_points(q, y_factor)),
    )


def _approximate_points(q: UniPoly, g: UniPoly) -> list[tuple[complex, complex]]:
    import numpy as np

    out: list[tuple[complex, complex]] = []
    if q.degree == 1:
        x_values = [complex(float(-q.monic()[0]))]
    else:
        x_values = approximate_roots(q)
    for xv in x_values:
        coeffs = [_approximate_coefficient(c, xv) for c in reversed(g.coeffs)]
        if len(coeffs) < 2:
            continue
        for yv in np.roots(coeffs):
            out.append((xv, complex(yv)))
    out.sort(key=lambda p: (round(p[0].real, 12), round(p[0].imag, 12), round(p[1].real, 12), round(p[1].imag, 12)))
    return out


def _approximate_coefficient(c, xv: complex) -> complex:
    if isinstance(c, Fraction):
        return complex(float(c))
    acc = 0j
    for a in reversed(c.value.coeffs):
        acc = acc * xv + float(a)
    return acc
