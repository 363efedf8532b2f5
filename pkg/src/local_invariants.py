"""Local invariants of a plane curve at a point: intersection numbers, ν, branch counts, δ."""
from fractions import Fraction

from src.errors import (
    BranchCountInconclusive,
    CommonComponentThroughPoint,
    ParityViolation,
    VerticalLineComponent,
)
from src.poly import BiPoly, HomogeneousForm, UniPoly, factor_over_q, squarefree_decomposition, uni_gcd
from src.residue_field import ResidueElement, ResidueField

DEFAULT_DEPTH_CAP = 32
MAX_LOCAL_SHEAR = 16


def intersection_number(f: BiPoly, g: BiPoly, point) -> int:
    """I_X(f, g) at X = point = (x0, y0), coordinates in Q or a residue field."""
    x0, y0 = point
    return intersection_at_origin(f.translate(x0, y0), g.translate(x0, y0))


def intersection_at_origin(F: BiPoly, G: BiPoly) -> int:
    """Fulton's reduction, run iteratively."""
    total = 0
    while True:
        if F.is_zero or G.is_zero:
            raise CommonComponentThroughPoint("Curves share a component through the point")
        if F.coefficient(0, 0) != 0 or G.coefficient(0, 0) != 0:
            return total
        f0 = _restrict_y0(F)
        g0 = _restrict_y0(G)
        r, s = f0.degree, g0.degree
        if r > s:
            F, G, f0, g0, r, s = G, F, g0, f0, s, r
        if r < 0:
            if s < 0:
                raise CommonComponentThroughPoint("Both curves contain the line y = 0 through the point")
            total += _order(g0)
            F = _divide_by_y(F)
            continue
        G = G * f0.leading_coefficient - F * BiPoly.monomial(s - r, 0, g0.leading_coefficient)


def projection_multiplicity(f: BiPoly, point) -> int:
    """ν = I_X(f, x − x0) = ord_y f(x0, y0 + y)."""
    x0, y0 = point
    return _nu_at_origin(f.translate(x0, y0))


def multiplicity_at(f: BiPoly, point) -> int:
    x0, y0 = point
    return f.translate(x0, y0).lowest_degree()


def branch_count(f: BiPoly, point, depth_cap: int = DEFAULT_DEPTH_CAP) -> int:
    """Number of local analytic branches of f = 0 at the point."""
    x0, y0 = point
    F = f.translate(x0, y0)
    if F.coefficient(0, 0) != 0:
        raise ValueError("Point is not on the curve")
    return branches_at_origin(F, depth_cap)


def branches_at_origin(F: BiPoly, depth_cap: int = DEFAULT_DEPTH_CAP) -> int:
    return _branches(F, depth_cap)


def delta_invariant(f: BiPoly, point, depth_cap: int = DEFAULT_DEPTH_CAP) -> tuple[int, int]:
    """(delta_std, delta_alt) at the point."""
    x0, y0 = point
    data = local_data_at_origin(f.translate(x0, y0), depth_cap)
    return data["delta_std"], data["delta_alt"]


def local_data_at_origin(F: BiPoly, depth_cap: int = DEFAULT_DEPTH_CAP) -> dict:
    """
    Multiplicity, I(F, F_y), ν, r and both δ values for a reduced curve through the origin.

    When the line x = 0 is a component, local coordinates are swapped, or sheared
    by x → x + t·y, before I(F, F_y) and ν are taken. Branch count and δ do not
    depend on the choice.
    """
    if F.coefficient(0, 0) != 0:
        raise ValueError("Point is not on the curve")
    local, coordinate_change = _without_vertical_component(F)
    int_number = intersection_at_origin(local, local.diff("y"))
    nu = _nu_at_origin(local)
    r = _branches(F, depth_cap)
    numerator = int_number - nu + r
    if numerator % 2 != 0:
        raise ParityViolation(f"(f, f_y) - nu + r = {numerator} is odd")
    return {
        "multiplicity": F.lowest_degree(),
        "int_number": int_number,
        "nu": nu,
        "branches": r,
        "delta_std": numerator // 2,
        "delta_alt": int_number + r - nu,
        "coordinate_change": coordinate_change,
    }


def _restrict_y0(F: BiPoly) -> UniPoly:
    return UniPoly(F.coefficient(i, 0) for i in range(F.degree_x + 1))


def _order(u: UniPoly) -> int:
    for i, c in enumerate(u.coeffs):
        if c != 0:
            return i
    raise ValueError("Order of the zero polynomial")


def _divide_by_y(F: BiPoly) -> BiPoly:
    return BiPoly({(i, j - 1): c for (i, j), c in F.terms.items()})


def _divide_by_x_power(F: BiPoly, power: int) -> BiPoly:
    return BiPoly({(i - power, j): c for (i, j), c in F.terms.items()})


def _nu_at_origin(F: BiPoly) -> int:
    column = [F.coefficient(0, j) for j in range(F.degree_y + 1)]
    for j, c in enumerate(column):
        if c != 0:
            return j
    raise VerticalLineComponent("The vertical line through the point is a component of the curve")


def _has_vertical_component(F: BiPoly) -> bool:
    return all(i > 0 for i, _ in F.terms)


def _without_vertical_component(F: BiPoly) -> tuple[BiPoly, str]:
    if not _has_vertical_component(F):
        return F, "none"
    swapped = F.swap()
    if not _has_vertical_component(swapped):
        return swapped, "swap"
    for t in range(1, MAX_LOCAL_SHEAR + 1):
        sheared = F.substitute(BiPoly.x() + BiPoly.y() * t, BiPoly.y())
        if not _has_vertical_component(sheared):
            return sheared, f"shear:{t}"
    raise VerticalLineComponent("No local shear removes the vertical component")


def _is_residue(c) -> bool:
    return isinstance(c, ResidueElement) and not c.is_rational


def _coefficient_field(F: BiPoly) -> ResidueField | None:
    for c in F.terms.values():
        if _is_residue(c):
            return c.field
    return None


def _rationalize(F: BiPoly) -> BiPoly:
    """Drop residue-field wrappers when every coefficient is rational."""
    if _coefficient_field(F) is not None:
        return F
    return F.map_coefficients(lambda c: c.as_rational() if isinstance(c, ResidueElement) else c)


def _is_squarefree_form(T: HomogeneousForm) -> bool:
    if T.x_multiplicity() > 1:
        return False
    u = T.dehomogenize()
    if u.degree <= 0:
        return True
    return uni_gcd(u, u.derivative()).degree == 0


def _branches(F: BiPoly, depth: int) -> int:
    if depth < 0:
        raise BranchCountInconclusive("Branch recursion exceeded its depth cap")
    F = _rationalize(F)
    count = 0
    if all(j > 0 for _, j in F.terms):
        count += 1
        F = _divide_by_y(F)
    if all(i > 0 for i, _ in F.terms):
        count += 1
        F = _divide_by_x_power(F, 1)
    if F.coefficient(0, 0) != 0:
        return count
    e = F.lowest_degree()
    if e == 1:
        return count + 1
    if _is_squarefree_form(F.homogeneous_part(e)):
        return count + e
    for edge in _newton_edges(F):
        count += _edge_branches(F, edge, depth)
    return count


def _newton_edges(F: BiPoly) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Edges of the lower Newton polygon from the y-axis to the x-axis."""
    lowest_i: dict[int, int] = {}
    for i, j in F.terms:
        if j not in lowest_i or i < lowest_i[j]:
            lowest_i[j] = i
    current = (0, min(j for i, j in F.terms if i == 0))
    edges = []
    while current[1] > 0:
        a, b = current
        best = None
        for j, i in lowest_i.items():
            if j >= b:
                continue
            slope = Fraction(i - a, b - j)
            if best is None or slope < best[0] or (slope == best[0] and j < best[1][1]):
                best = (slope, (i, j))
        edges.append((current, best[1]))
        current = best[1]
    return edges


def _bezout(q: int, p: int) -> tuple[int, int]:
    """(a, b) with b·q − a·p = 1."""
    old_r, r = q, p
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
        old_t, t = t, old_t - quot * t
    return -old_t, old_s


def _edge_branches(F: BiPoly, edge, depth: int) -> int:
    (a1, b1), (a2, b2) = edge
    g = _gcd(a2 - a1, b1 - b2)
    p, q = (a2 - a1) // g, (b1 - b2) // g
    phi = UniPoly(F.coefficient(a2 - k * p, b2 + k * q) for k in range(g + 1))
    count = 0
    for factor, mult in squarefree_decomposition(phi):
        if mult == 1:
            count += factor.degree
            continue
        for root, weight in _roots_for_recursion(factor, F):
            transformed = _duval_transform(F, p, q, q * a1 + p * b1, root)
            count += weight * _branches(transformed, depth - 1)
    return count


def _roots_for_recursion(factor: UniPoly, F: BiPoly) -> list[tuple[object, int]]:
    """Representative roots of `factor` with the number of conjugates each stands for."""
    if factor.degree == 1:
        return [(-factor.monic()[0], 1)]
    if _coefficient_field(F) is not None:
        raise BranchCountInconclusive("Repeated nonlinear edge factor over a residue field")
    rational = factor.map_coefficients(lambda c: c.as_rational() if isinstance(c, ResidueElement) else c)
    out: list[tuple[object, int]] = []
    for irreducible, _ in factor_over_q(rational):
        if irreducible.degree == 1:
            out.append((-irreducible[0], 1))
        else:
            out.append((ResidueField(irreducible, "xi").generator(), irreducible.degree))
    return out


def _duval_transform(F: BiPoly, p: int, q: int, weight: int, xi) -> BiPoly:
    """F(ξ^a·X^q, X^p·(ξ^b + Y)) / X^weight with b·q − a·p = 1."""
    a, b = _bezout(q, p)
    new_x = BiPoly.monomial(q, 0, xi ** a)
    new_y = BiPoly.monomial(p, 0, 1) * (BiPoly.y() + xi ** b)
    return _divide_by_x_power(F.substitute(new_x, new_y), weight)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)
