"""Exact univariate and bivariate polynomial algebra over Q (and over residue fields Q[t]/(q))."""
import warnings
from collections.abc import Iterable, Mapping
from fractions import Fraction
from types import MappingProxyType

from src.errors import CoefficientGrowthWarning, DivisionByZeroPolynomial

COEFFICIENT_BITS_WARNING = 100_000
DEFAULT_VARS = ("x", "y")


def coerce_coefficient(c):
    """Ints become Fractions; Fractions and residue-field elements pass through."""
    if isinstance(c, bool):
        raise TypeError("bool is not a polynomial coefficient")
    if isinstance(c, int):
        return Fraction(c)
    return c


def format_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _format_coefficient(c) -> str:
    if isinstance(c, Fraction):
        return format_rational(c)
    return f"({c})"


def _is_negative(c) -> bool:
    return isinstance(c, Fraction) and c < 0


def _warn_on_growth(c) -> None:
    if isinstance(c, Fraction):
        bits = c.numerator.bit_length() + c.denominator.bit_length()
        if bits > COEFFICIENT_BITS_WARNING:
            warnings.warn(
                f"Coefficient size reached {bits} bits",
                CoefficientGrowthWarning,
                stacklevel=3,
            )


class UniPoly:
    """Dense univariate polynomial, coefficients stored low → high, no trailing zeros."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [coerce_coefficient(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c=1) -> "UniPoly":
        return cls([0] * degree + [c])

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading_coefficient(self):
        if not self._coeffs:
            return Fraction(0)
        return self._coeffs[-1]

    def __getitem__(self, i: int):
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            other = UniPoly.constant(other)
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(("UniPoly", self._coeffs))

    def __add__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            other = UniPoly.constant(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return UniPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self._coeffs)

    def __sub__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            other = UniPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "UniPoly":
        return UniPoly.constant(other) - self

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            c = coerce_coefficient(other)
            return UniPoly(a * c for a in self._coeffs)
        if self.is_zero or other.is_zero:
            return UniPoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] = a * b + out[i + j]
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError(f"Negative exponent {e} for a polynomial")
        result = UniPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero:
            raise DivisionByZeroPolynomial("Division by the zero polynomial")
        rem = list(self._coeffs)
        dq = len(rem) - len(other._coeffs)
        if dq < 0:
            return UniPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        lc = other.leading_coefficient
        db = other.degree
        for k in range(dq, -1, -1):
            c = rem[k + db] / lc
            quot[k] = c
            if c == 0:
                continue
            for j, b in enumerate(other._coeffs):
                rem[k + j] = rem[k + j] - c * b
        return UniPoly(quot), UniPoly(rem[:db])

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def exact_quotient(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        lc = self.leading_coefficient
        return UniPoly(c / lc for c in self._coeffs)

    def derivative(self) -> "UniPoly":
        return UniPoly(c * i for i, c in enumerate(self._coeffs) if i > 0)

    def evaluate(self, value):
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def compose(self, other: "UniPoly") -> "UniPoly":
        acc = UniPoly()
        for c in reversed(self._coeffs):
            acc = acc * other + c
        return acc

    def map_coefficients(self, fn) -> "UniPoly":
        return UniPoly(fn(c) for c in self._coeffs)

    def to_text(self, var: str = "z") -> str:
        return BiPoly({(i, 0): c for i, c in enumerate(self._coeffs)}).to_text((var, "_"))

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"UniPoly({self})"


def rational_from_native(c) -> Fraction:
    """A sympy ground element of ZZ or QQ as a Fraction."""
    return Fraction(int(c.numerator), int(c.denominator))


def _rational_to_native(c):
    from sympy import QQ

    return QQ(c.numerator, c.denominator)


def sympy_ground(coeffs: Iterable):
    """
    The sympy domain holding every coefficient, with converters into and out of it.

    Fractions live in QQ. Residue-field elements carry their own algebraic field;
    two different fields in one polynomial are rejected.
    """
    from sympy import QQ

    field = None
    for c in coeffs:
        other = getattr(c, "field", None)
        if other is None:
            continue
        if field is None:
            field = other
        elif other != field:
            raise ValueError("Mixing elements of different residue fields")
    if field is None:
        return QQ, _rational_to_native, rational_from_native
    return field.domain, field.to_native, field.wrap


def _to_sympy_uni(polys: list["UniPoly"]):
    import sympy

    domain, to_native, from_native = sympy_ground(c for u in polys for c in u.coeffs)
    z = sympy.Symbol("z")
    out = [
        sympy.Poly.from_list([to_native(c) for c in reversed(u.coeffs)], z, domain=domain)
        for u in polys
    ]
    return out, from_native


def _from_sympy_uni(p, from_native) -> "UniPoly":
    return UniPoly(from_native(c) for c in reversed(p.rep.to_list()))


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over the coefficient field; gcd(0, 0) = 0."""
    (pa, pb), from_native = _to_sympy_uni([a, b])
    return _from_sympy_uni(pa.gcd(pb), from_native).monic()


def squarefree_decomposition(u: UniPoly) -> list[tuple[UniPoly, int]]:
    """Monic pairwise-coprime squarefree (s_i, i) with u = lc·Π s_i^i, by increasing i."""
    if u.is_zero:
        raise ValueError("Squarefree decomposition of the zero polynomial")
    if u.degree == 0:
        return []
    (pu,), from_native = _to_sympy_uni([u])
    _, factors = pu.sqf_list()
    return [(_from_sympy_uni(s, from_native).monic(), int(i)) for s, i in factors]


def uni_squarefree_part(u: UniPoly) -> UniPoly:
    if u.is_zero:
        raise ValueError("Squarefree part of the zero polynomial")
    if u.degree == 0:
        return UniPoly.constant(1)
    (pu,), from_native = _to_sympy_uni([u])
    return _from_sympy_uni(pu.sqf_part(), from_native).monic()


def rational_univariate_key(u: UniPoly) -> tuple:
    return (u.degree, tuple(u.coeffs))


def factor_over_q(u: UniPoly) -> list[tuple[UniPoly, int]]:
    """Monic irreducible factors over Q with multiplicities, in (degree, coefficients) order."""
    if u.is_zero:
        raise ValueError("Cannot factor the zero polynomial")
    if u.degree <= 0:
        return []
    (pu,), from_native = _to_sympy_uni([u])
    if not pu.domain.is_QQ:
        raise ValueError(f"Only polynomials over Q can be factored, got coefficients in {pu.domain}")
    _, factors = pu.factor_list()
    out = [(_from_sympy_uni(factor, from_native).monic(), int(mult)) for factor, mult in factors]
    out.sort(key=lambda fm: rational_univariate_key(fm[0]))
    return out


def approximate_roots(u: UniPoly) -> list[complex]:
    """Floating-point roots, for display only; sorted by (real, imag)."""
    import numpy as np

    if u.degree <= 0:
        return []
    roots = np.roots([float(c) for c in reversed(u.coeffs)])
    return sorted((complex(r) for r in roots), key=lambda r: (round(r.real, 12), round(r.imag, 12)))


def _graded_lex_key(exp: tuple[int, int]) -> tuple[int, int]:
    return (exp[0] + exp[1], exp[0])


class BiPoly:
    """Sparse bivariate polynomial; terms map (i, j) to the coefficient of x^i·y^j."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"Negative exponent in term ({i}, {j})")
            c = coerce_coefficient(c)
            if c != 0:
                clean[(i, j)] = c
        self._terms = clean

    @classmethod
    def zero(cls) -> "BiPoly":
        return BiPoly()

    @classmethod
    def constant(cls, c) -> "BiPoly":
        return BiPoly({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "BiPoly":
        return BiPoly({(i, j): c})

    @classmethod
    def x(cls) -> "BiPoly":
        return BiPoly({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPoly":
        return BiPoly({(0, 1): 1})

    @classmethod
    def from_univariate(cls, u: UniPoly, var: str = "x") -> "BiPoly":
        if var == "x":
            return BiPoly({(i, 0): c for i, c in enumerate(u.coeffs)})
        return BiPoly({(0, j): c for j, c in enumerate(u.coeffs)})

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(i + j for i, j in self._terms)

    @property
    def degree_x(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    @property
    def degree_y(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    @property
    def is_constant(self) -> bool:
        return self.degree <= 0

    @property
    def leading_exponent(self) -> tuple[int, int]:
        return max(self._terms, key=_graded_lex_key)

    @property
    def leading_coefficient(self):
        if not self._terms:
            return Fraction(0)
        return self._terms[self.leading_exponent]

    def coefficient(self, i: int, j: int):
        return self._terms.get((i, j), Fraction(0))

    def sorted_terms(self) -> list[tuple[tuple[int, int], object]]:
        """Terms in descending graded-lex order (x > y)."""
        return sorted(self._terms.items(), key=lambda t: _graded_lex_key(t[0]), reverse=True)

    def sort_key(self) -> tuple:
        return tuple(
            (i + j, i, str(c)) for (i, j), c in self.sorted_terms()
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            other = BiPoly.constant(other)
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            other = BiPoly.constant(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out[e] + c if e in out else c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            other = BiPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "BiPoly":
        return BiPoly.constant(other) - self

    def __mul__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            c = coerce_coefficient(other)
            return BiPoly({e: a * c for e, a in self._terms.items()})
        out: dict = {}
        for (i1, j1), a in self._terms.items():
            for (i2, j2), b in other._terms.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out[e] + a * b if e in out else a * b
        result = BiPoly(out)
        for c in result._terms.values():
            _warn_on_growth(c)
        return result

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BiPoly":
        if e < 0:
            raise ValueError(f"Negative exponent {e} for a polynomial")
        result = BiPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c) -> "BiPoly":
        return self * c

    def monic(self) -> "BiPoly":
        """Scale so the graded-lex leading coefficient is 1."""
        if self.is_zero:
            return self
        lc = self.leading_coefficient
        return BiPoly({e: c / lc for e, c in self._terms.items()})

    def diff(self, var: str) -> "BiPoly":
        if var == "x":
            return BiPoly({(i - 1, j): c * i for (i, j), c in self._terms.items() if i > 0})
        if var == "y":
            return BiPoly({(i, j - 1): c * j for (i, j), c in self._terms.items() if j > 0})
        raise ValueError(f"Unknown variable '{var}'; expected 'x' or 'y'")

    def evaluate(self, x0, y0):
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            total = total + c * (x0 ** i) * (y0 ** j)
        return total

    def substitute(self, x: "BiPoly", y: "BiPoly") -> "BiPoly":
        """Compose f(X(x, y), Y(x, y))."""
        x_pows = _power_table(x, self.degree_x)
        y_pows = _power_table(y, self.degree_y)
        out = BiPoly()
        for (i, j), c in self._terms.items():
            out = out + x_pows[i] * y_pows[j] * c
        return out

    def translate(self, x0, y0) -> "BiPoly":
        """f(x + x0, y + y0)."""
        return self.substitute(BiPoly.x() + x0, BiPoly.y() + y0)

    def swap(self) -> "BiPoly":
        return BiPoly({(j, i): c for (i, j), c in self._terms.items()})

    def map_coefficients(self, fn) -> "BiPoly":
        return BiPoly({e: fn(c) for e, c in self._terms.items()})

    def homogeneous_part(self, d: int) -> "HomogeneousForm":
        return HomogeneousForm({e: c for e, c in self._terms.items() if e[0] + e[1] == d}, d)

    def homogeneous_parts(self) -> list["HomogeneousForm"]:
        return [self.homogeneous_part(d) for d in range(self.degree + 1)]

    def lowest_degree(self) -> int:
        return min((i + j for i, j in self._terms), default=-1)

    def y_coefficients(self) -> list[UniPoly]:
        """Coefficients of y^0, y^1, … as univariate polynomials in x."""
        rows: list[dict[int, object]] = [dict() for _ in range(self.degree_y + 1)]
        for (i, j), c in self._terms.items():
            rows[j][i] = c
        return [UniPoly(row.get(i, 0) for i in range(max(row, default=-1) + 1)) for row in rows]

    @classmethod
    def from_y_coefficients(cls, coeffs: Iterable[UniPoly]) -> "BiPoly":
        terms = {}
        for j, u in enumerate(coeffs):
            for i, c in enumerate(u.coeffs):
                if c != 0:
                    terms[(i, j)] = c
        return BiPoly(terms)

    def as_univariate(self, var: str) -> UniPoly:
        """The polynomial as a UniPoly in `var`; the other variable must be absent."""
        if var == "x":
            if self.degree_y > 0:
                raise ValueError(f"{self} depends on y")
            return UniPoly(self.coefficient(i, 0) for i in range(self.degree_x + 1))
        if self.degree_x > 0:
            raise ValueError(f"{self} depends on x")
        return UniPoly(self.coefficient(0, j) for j in range(self.degree_y + 1))

    def to_text(self, variables: tuple[str, str] = DEFAULT_VARS) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for (i, j), c in self.sorted_terms():
            factors = []
            for var, e in ((variables[0], i), (variables[1], j)):
                if e == 1:
                    factors.append(var)
                elif e > 1:
                    factors.append(f"{var}^{e}")
            negative = _is_negative(c)
            magnitude = -c if negative else c
            if factors and magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_format_coefficient(magnitude)] + factors)
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"BiPoly({self})"


class HomogeneousForm(BiPoly):
    """A BiPoly whose terms all have total degree `form_degree`."""

    __slots__ = ("form_degree",)

    def __init__(self, terms: Mapping | None = None, form_degree: int | None = None):
        super().__init__(terms)
        degrees = {i + j for i, j in self._terms}
        if len(degrees) > 1:
            raise ValueError(f"Not homogeneous: term degrees {sorted(degrees)}")
        if form_degree is None:
            if not degrees:
                raise ValueError("form_degree is required for the zero form")
            form_degree = degrees.pop()
        elif degrees and degrees != {form_degree}:
            raise ValueError(f"Terms have degree {degrees.pop()}, expected {form_degree}")
        self.form_degree = form_degree

    @classmethod
    def of(cls, poly: BiPoly, form_degree: int | None = None) -> "HomogeneousForm":
        return HomogeneousForm(dict(poly.terms), form_degree)

    def dehomogenize(self) -> UniPoly:
        """h(1, z)."""
        return UniPoly(self.coefficient(self.form_degree - j, j) for j in range(self.form_degree + 1))

    def x_multiplicity(self) -> int:
        """Exponent of the factor x in h (the zero [0:1] on the line at infinity)."""
        return self.form_degree - self.dehomogenize().degree


def homogenize(u: UniPoly, d: int) -> HomogeneousForm:
    """Σ c_j x^(d−j) y^j for u = Σ c_j z^j; requires deg u ≤ d."""
    if u.degree > d:
        raise ValueError(f"Cannot homogenize degree {u.degree} polynomial to degree {d}")
    return HomogeneousForm({(d - j, j): c for j, c in enumerate(u.coeffs)}, d)


def _power_table(p: BiPoly, n: int) -> list[BiPoly]:
    table = [BiPoly.constant(1)]
    for _ in range(max(n, 0)):
        table.append(table[-1] * p)
    return table


def _sympy_gens(order: str = "xy"):
    import sympy

    x, y = sympy.symbols("x y")
    return (x, y) if order == "xy" else (y, x)


def to_sympy_poly(polys: list[BiPoly], order: str = "xy"):
    """The polynomials as sympy Polys in (x, y), or (y, x) when order is 'yx'; plus the converter back."""
    import sympy

    domain, to_native, from_native = sympy_ground(c for p in polys for c in p.terms.values())
    gens = _sympy_gens(order)
    out = []
    for p in polys:
        rep = {(e if order == "xy" else e[::-1]): to_native(c) for e, c in p.terms.items()}
        out.append(sympy.Poly.from_dict(rep, *gens, domain=domain))
    return out, from_native


def from_sympy_poly(p, from_native=rational_from_native, order: str = "xy") -> BiPoly:
    terms = p.as_dict(native=True)
    if order == "yx":
        return BiPoly({(e[1], e[0]): from_native(c) for e, c in terms.items()})
    return BiPoly({tuple(e): from_native(c) for e, c in terms.items()})


def exact_divide(f: BiPoly, g: BiPoly) -> BiPoly | None:
    """Return q with f = q·g, or None when g does not divide f."""
    from sympy.polys.polyerrors import ExactQuotientFailed

    if g.is_zero:
        raise DivisionByZeroPolynomial("Division by the zero polynomial")
    if f.is_zero:
        return BiPoly()
    (pf, pg), from_native = to_sympy_poly([f, g])
    try:
        quotient = pf.exquo(pg)
    except ExactQuotientFailed:
        return None
    return from_sympy_poly(quotient, from_native)


def homogeneous_parts(f: BiPoly) -> list[HomogeneousForm]:
    return f.homogeneous_parts()


def squarefree_part(h):
    """Squarefree part of a HomogeneousForm or UniPoly, normalized monic."""
    if isinstance(h, UniPoly):
        return uni_squarefree_part(h)
    if h.is_zero:
        raise ValueError("Squarefree part of the zero form")
    h = HomogeneousForm.of(h) if not isinstance(h, HomogeneousForm) else h
    u = h.dehomogenize()
    s = uni_squarefree_part(u)
    form = BiPoly(homogenize(s, s.degree).terms)
    if h.x_multiplicity() > 0:
        form = form * BiPoly.x()
    return HomogeneousForm.of(form.monic())


def linear_factor_root_key(root: Fraction | None) -> tuple:
    """Order linear factors: x first, then roots z0 of h(1, z) by (|z0|, sign)."""
    if root is None:
        return (0, Fraction(0), False)
    return (1, abs(root), root < 0)


def linear_form_for_root(root: Fraction | None) -> HomogeneousForm:
    """The normalized linear form vanishing at [1 : root], or x for the point [0 : 1]."""
    if root is None:
        return HomogeneousForm({(1, 0): 1}, 1)
    if root == 0:
        return HomogeneousForm({(0, 1): 1}, 1)
    return HomogeneousForm({(1, 0): 1, (0, 1): -1 / root}, 1)


def factor_linear_rational(h: BiPoly) -> tuple[list[tuple[HomogeneousForm, int]], HomogeneousForm]:
    """Split off every rational linear factor of a homogeneous form."""
    h = HomogeneousForm.of(h) if not isinstance(h, HomogeneousForm) else h
    if h.is_zero:
        raise ValueError("Cannot factor the zero form")
    found: list[tuple[Fraction | None, int]] = []
    e = h.x_multiplicity()
    if e > 0:
        found.append((None, e))
    u = h.dehomogenize()
    for factor, mult in factor_over_q(u):
        if factor.degree == 1:
            found.append((-factor[0], mult))
    found.sort(key=lambda rm: linear_factor_root_key(rm[0]))
    factors = [(linear_form_for_root(root), mult) for root, mult in found]
    product = BiPoly.constant(1)
    for form, mult in factors:
        product = product * form ** mult
    remainder = exact_divide(h, product)
    if remainder is None:
        raise ArithmeticError(f"Linear factors do not divide {h}")
    return factors, HomogeneousForm.of(remainder, h.form_degree - product.degree)
