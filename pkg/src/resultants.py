"""Resultants and bivariate gcd over Q[x, y], computed by sympy (subresultant PRS, heuristic gcd)."""
from src.errors import DegenerateResultantInput
from src.poly import BiPoly, UniPoly, from_sympy_poly, rational_from_native, to_sympy_poly


def resultant_y(f: BiPoly, g: BiPoly) -> UniPoly:
    """Res_y(f, g) as a polynomial in x."""
    if f.degree_y < 1 or g.degree_y < 1:
        raise DegenerateResultantInput(
            f"resultant_y needs positive y-degree, got {f.degree_y} and {g.degree_y}"
        )
    return _resultant(f, g, "yx")


def resultant_x(f: BiPoly, g: BiPoly) -> UniPoly:
    """Res_x(f, g) as a polynomial in y."""
    if f.degree_x < 1 or g.degree_x < 1:
        raise DegenerateResultantInput(
            f"resultant_x needs positive x-degree, got {f.degree_x} and {g.degree_x}"
        )
    return _resultant(f, g, "xy")


def eliminate_y(f: BiPoly, g: BiPoly) -> UniPoly:
    """Res_y extended to y-degree 0 inputs: Res(a(x), g) = a^deg_y(g)."""
    if f.is_zero or g.is_zero:
        return UniPoly()
    df, dg = f.degree_y, g.degree_y
    if df == 0 and dg == 0:
        return UniPoly.constant(1)
    if df == 0:
        return f.as_univariate("x") ** dg
    if dg == 0:
        return g.as_univariate("x") ** df
    return _resultant(f, g, "yx")


def gcd(f: BiPoly, g: BiPoly) -> BiPoly:
    """Gcd over Q[x, y], normalized with graded-lex leading coefficient 1."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if f.is_zero:
        return g.monic()
    if g.is_zero:
        return f.monic()
    (pf, pg), from_native = to_sympy_poly([f, g])
    return from_sympy_poly(pf.gcd(pg), from_native).monic()


def gcd_many(polys: list[BiPoly]) -> BiPoly:
    nonzero = [p for p in polys if not p.is_zero]
    if not nonzero:
        raise ValueError("gcd of only zero polynomials is undefined")
    result = nonzero[0].monic()
    for p in nonzero[1:]:
        if result.is_constant:
            break
        result = gcd(result, p)
    return result


def _resultant(f: BiPoly, g: BiPoly, order: str) -> UniPoly:
    """Eliminate the first generator of `order`; the result lives in the second."""
    (pf, pg), from_native = to_sympy_poly([f, g], order)
    if from_native is not rational_from_native:
        raise ValueError("Resultants are only taken over Q")
    res = pf.resultant(pg)
    return UniPoly(rational_from_native(c) for c in reversed(res.rep.to_list()))
