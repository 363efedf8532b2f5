"""Cofactor certificates P·f_x + Q·f_y = k·f and the checks built on them."""
from fractions import Fraction

from src.algebraic_points import describe_class, specialize_x
from src.poly import BiPoly, HomogeneousForm, exact_divide, squarefree_part
from src.residue_field import root_of
from src.resultants import gcd, gcd_many
from src.singularities import affine_singular_classes
from src.types import FAILS, HOLDS, NOT_APPLICABLE, Certificate, CertificateCheck, Verdict, VectorField
from src.vector_field import infinity_chart, r_infinity

IRREDUCIBLE = "verified"
UNKNOWN = "unknown"
REDUCIBLE = "reducible"


def derivation(field: VectorField, f: BiPoly) -> BiPoly:
    """P·∂f/∂x + Q·∂f/∂y."""
    return field.P * f.diff("x") + field.Q * f.diff("y")


def compute_cofactor(field: VectorField, f: BiPoly) -> Certificate | None:
    """Return the certificate (f, k) when f is an algebraic partial integral, else None."""
    if f.is_constant:
        raise ValueError(f"Curve must be nonconstant, got {f}")
    k = exact_divide(derivation(field, f), f)
    if k is None:
        return None
    if k.degree > field.m - 1:
        raise ArithmeticError(f"Cofactor {k} has degree {k.degree} > m - 1 = {field.m - 1}")
    return Certificate(field=field, f=f, k=k, irreducibility=irreducibility_status(f))


def verify_certificate(cert: Certificate) -> CertificateCheck:
    residual = derivation(cert.field, cert.f) - cert.k * cert.f
    return CertificateCheck(holds=residual.is_zero, residual=residual)


def leading_cofactor(field: VectorField, f_n: BiPoly) -> HomogeneousForm | None:
    """k_{m−1} = (P_m·∂f_n/∂x + Q_m·∂f_n/∂y) / f_n when the division is exact."""
    if f_n.is_zero:
        raise ValueError("Leading form must be nonzero")
    f_n = HomogeneousForm.of(f_n)
    P_m = field.P.homogeneous_part(field.m)
    Q_m = field.Q.homogeneous_part(field.m)
    numerator = P_m * f_n.diff("x") + Q_m * f_n.diff("y")
    k = exact_divide(numerator, f_n)
    if k is None:
        return None
    return HomogeneousForm.of(k, field.m - 1)


def irreducibility_status(f: BiPoly) -> str:
    """Lines are irreducible; conics are decided by the determinant of their 3×3 matrix."""
    if f.degree == 1:
        return IRREDUCIBLE
    if not gcd_many([f, f.diff("x"), f.diff("y")]).is_constant:
        return REDUCIBLE
    if f.degree == 2:
        return IRREDUCIBLE if _conic_determinant(f) != 0 else REDUCIBLE
    return UNKNOWN


def check_theorem1(field: VectorField, f: BiPoly) -> Verdict:
    """Every point of the curve at infinity is a Darboux point: sqf(f_n) | sqf(R_{m+1})."""
    name = "infinity-points-in-darboux-divisor"
    R = r_infinity(field)
    if R.is_zero:
        return Verdict(name, NOT_APPLICABLE, "R_{m+1} vanishes identically (dicritical infinity)")
    f_n = f.homogeneous_part(f.degree)
    sf = squarefree_part(f_n)
    sr = squarefree_part(R)
    values = {"sqf_f_n": str(sf), "sqf_R": str(sr)}
    if exact_divide(sr, sf) is not None:
        return Verdict(name, HOLDS, "sqf(f_n) divides sqf(R_{m+1})", values)
    offending = exact_divide(sf, gcd(sf, sr)).monic()
    values["offending_factor"] = str(offending)
    return Verdict(name, FAILS, f"factor {offending} of f_n does not divide R_{{m+1}}", values)


def check_theorem4(cert: Certificate) -> Verdict:
    """Every affine singular point of the curve is an equilibrium of the field."""
    name = "singular-points-are-equilibria"
    if not verify_certificate(cert).holds:
        raise ValueError(f"Certificate for {cert.f} does not satisfy the cofactor identity")
    classes = affine_singular_classes(cert.f)
    violations = []
    for pc in classes:
        alpha = root_of(pc.x_factor, "x")
        for label, poly in (("P", cert.field.P), ("Q", cert.field.Q)):
            if not (specialize_x(poly, alpha) % pc.y_factor).is_zero:
                violations.append(f"{label} does not vanish on {describe_class(pc)}")
    values = {
        "singular_points": [describe_class(pc) for pc in classes],
        "violations": violations,
    }
    if violations:
        return Verdict(name, FAILS, "a singular point is not an equilibrium (certificate or curve is suspect)", values)
    if not classes:
        return Verdict(name, HOLDS, "curve has no affine singular points", values)
    return Verdict(name, HOLDS, f"{len(classes)} singular class(es), all equilibria", values)


def split_certificate(cert: Certificate, factor: BiPoly) -> tuple[Certificate, Certificate]:
    """Certificates of a factor g and of f/g; their cofactors add up to k."""
    rest = exact_divide(cert.f, factor)
    if rest is None or factor.is_constant or rest.is_constant:
        raise ValueError(f"{factor} is not a proper factor of {cert.f}")
    first = compute_cofactor(cert.field, factor)
    second = compute_cofactor(cert.field, rest)
    if first is None or second is None:
        raise ArithmeticError(f"A factor of the invariant curve {cert.f} is not invariant")
    if first.k + second.k != cert.k:
        raise ArithmeticError("Cofactors of the factors do not add up")
    return first, second


def invariance_residual(field: VectorField, f: BiPoly) -> BiPoly:
    """Remainder of P·f_x + Q·f_y on division by f (graded lex); zero exactly when f is invariant."""
    _, remainder = _divide_with_remainder(derivation(field, f), f)
    return remainder


def chart_consistency(cert: Certificate) -> BiPoly:
    """A·F_u + B·F_v − K·F in the chart at infinity; zero for every valid certificate."""
    chart = infinity_chart(cert.field, cert.f, cert.k)
    return chart.A * chart.F.diff("x") + chart.B * chart.F.diff("y") - chart.K * chart.F


def same_curve(f: BiPoly, g: BiPoly) -> bool:
    """f and g agree up to a nonzero rational factor."""
    return f.monic() == g.monic()


def _divide_with_remainder(f: BiPoly, g: BiPoly) -> tuple[BiPoly, BiPoly]:
    lead_exp = g.leading_exponent
    lead_c = g.leading_coefficient
    quotient = BiPoly.zero()
    remainder = BiPoly.zero()
    rest = f
    while not rest.is_zero:
        i, j = rest.leading_exponent
        c = rest.leading_coefficient
        if i >= lead_exp[0] and j >= lead_exp[1]:
            step = BiPoly.monomial(i - lead_exp[0], j - lead_exp[1], c / lead_c)
            quotient = quotient + step
            rest = rest - step * g
        else:
            term = BiPoly.monomial(i, j, c)
            remainder = remainder + term
            rest = rest - term
    return quotient, remainder


def _conic_determinant(f: BiPoly) -> Fraction:
    a, b, c = f.coefficient(2, 0), f.coefficient(1, 1), f.coefficient(0, 2)
    d, e, g = f.coefficient(1, 0), f.coefficient(0, 1), f.coefficient(0, 0)
    half = Fraction(1, 2)
    m = [
        [a, b * half, d * half],
        [b * half, c, e * half],
        [d * half, e * half, g],
    ]
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
