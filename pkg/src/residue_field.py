"""Arithmetic in K = Q[t]/(q) for an irreducible q; elements wrap sympy algebraic numbers and behave like Fractions."""
from fractions import Fraction
from functools import lru_cache

from src.poly import UniPoly, factor_over_q, rational_from_native


@lru_cache(maxsize=None)
def _algebraic_field(modulus: tuple[Fraction, ...]):
    """QQ(α) for a root α of the polynomial with coefficients `modulus` (low → high)."""
    import sympy

    z = sympy.Symbol("z")
    q = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(modulus)], z)
    return sympy.QQ.algebraic_field(sympy.CRootOf(q, 0))


class ResidueField:
    """The number field Q[t]/(modulus); `modulus` must be irreducible over Q."""

    def __init__(self, modulus: UniPoly, name: str = "t"):
        if modulus.degree < 1:
            raise ValueError(f"Modulus must have positive degree, got {modulus}")
        self.modulus = modulus.monic()
        self.name = name
        self.domain = _algebraic_field(self.modulus.coeffs)
        if self.domain.mod.degree() != self.modulus.degree:
            raise ArithmeticError(f"Modulus {self.modulus.to_text(name)} is reducible")

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def to_native(self, value):
        """A Fraction or an element of this field as a sympy algebraic number."""
        from sympy import QQ

        if isinstance(value, ResidueElement):
            if value.field != self:
                raise ValueError("Mixing elements of different residue fields")
            return value.element
        value = Fraction(value)
        return self.domain.convert_from(QQ(value.numerator, value.denominator), QQ)

    def wrap(self, native) -> "ResidueElement":
        return ResidueElement(self, native)

    def element(self, value) -> "ResidueElement":
        if isinstance(value, ResidueElement):
            return value
        if isinstance(value, UniPoly):
            reduced = value % self.modulus
            acc = self.to_native(0)
            for c in reversed(reduced.coeffs):
                acc = acc * self.domain.unit + self.to_native(c)
            return ResidueElement(self, acc)
        return ResidueElement(self, self.to_native(value))

    def generator(self) -> "ResidueElement":
        return ResidueElement(self, self.domain.unit)

    def __eq__(self, other) -> bool:
        return isinstance(other, ResidueField) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(("ResidueField", self.modulus))

    def __repr__(self) -> str:
        return f"ResidueField({self.modulus.to_text(self.name)})"


class ResidueElement:
    __slots__ = ("field", "element")

    def __init__(self, field: ResidueField, element):
        self.field = field
        self.element = element

    def _lift(self, other):
        if isinstance(other, ResidueElement):
            if other.field != self.field:
                raise ValueError("Mixing elements of different residue fields")
            return other.element
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.to_native(other)
        return None

    @property
    def value(self) -> UniPoly:
        """The reduced representative as a polynomial in the generator."""
        return UniPoly(rational_from_native(c) for c in reversed(self.element.to_list()))

    @property
    def is_rational(self) -> bool:
        return self.element.is_ground

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.value[0]

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ResidueElement(self.field, self.element + o)

    __radd__ = __add__

    def __neg__(self):
        return ResidueElement(self.field, -self.element)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ResidueElement(self.field, self.element - o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ResidueElement(self.field, o - self.element)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ResidueElement(self.field, self.element * o)

    __rmul__ = __mul__

    def inverse(self) -> "ResidueElement":
        if self.element.is_zero:
            raise ZeroDivisionError("Inverse of zero in a residue field")
        return ResidueElement(self.field, self.field.domain.one / self.element)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * ResidueElement(self.field, o).inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ResidueElement(self.field, o) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return ResidueElement(self.field, self.element ** e)

    def __eq__(self, other) -> bool:
        if isinstance(other, ResidueElement) and other.field != self.field:
            return False
        o = self._lift(other)
        return o is not None and self.element == o

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self.as_rational())
        return hash((self.field, self.element))

    def __str__(self) -> str:
        return self.value.to_text(self.field.name)

    def __repr__(self) -> str:
        return f"ResidueElement({self})"


def field_for_factor(q: UniPoly) -> ResidueField | None:
    """None for linear q (its root is rational), otherwise Q[t]/(q)."""
    if q.degree == 1:
        return None
    return ResidueField(q)


def root_of(q: UniPoly, name: str = "t"):
    """The distinguished root of an irreducible q: a Fraction when q is linear, else the class of t."""
    if q.degree == 1:
        q = q.monic()
        return -q[0]
    return ResidueField(q, name).generator()


def is_irreducible_over_q(q: UniPoly) -> bool:
    factors = factor_over_q(q)
    return len(factors) == 1 and factors[0][1] == 1
