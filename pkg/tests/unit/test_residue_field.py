"""Tests for src/residue_field.py."""
from fractions import Fraction

import pytest


def gaussian():
    from src.poly import UniPoly
    from src.residue_field import ResidueField

    return ResidueField(UniPoly([1, 0, 1]), "i")


class TestArithmetic:
    def test_generator_squares_to_minus_one(self):
        i = gaussian().generator()
        assert i * i == -1

    def test_inverse(self):
        i = gaussian().generator()
        inv = 1 / (1 + i)
        assert inv * (1 + i) == 1
        assert inv == (1 - i) * Fraction(1, 2)

    def test_negative_power(self):
        from src.poly import UniPoly
        from src.residue_field import ResidueField

        sqrt2 = ResidueField(UniPoly([-2, 0, 1]), "s").generator()
        assert sqrt2 ** -2 == Fraction(1, 2)

    def test_inverse_of_zero_raises(self):
        zero = gaussian().element(0)
        with pytest.raises(ZeroDivisionError):
            zero.inverse()

    def test_mixing_fields_raises(self):
        from src.poly import UniPoly
        from src.residue_field import ResidueField

        i = gaussian().generator()
        s = ResidueField(UniPoly([-2, 0, 1]), "s").generator()
        with pytest.raises(ValueError, match="different residue fields"):
            _ = i + s

    def test_rational_element_hashes_like_fraction(self):
        i = gaussian().generator()
        assert hash(i * i) == hash(Fraction(-1))
        assert (i * i).is_rational
        assert (i * i).as_rational() == -1

    def test_text(self):
        i = gaussian().generator()
        assert str(2 * i + 1) == "2*i + 1"


class TestRootOf:
    def test_linear_gives_fraction(self):
        from src.poly import UniPoly
        from src.residue_field import root_of

        assert root_of(UniPoly([3, 2])) == Fraction(-3, 2)

    def test_nonlinear_gives_generator(self):
        from src.poly import UniPoly
        from src.residue_field import ResidueElement, root_of

        alpha = root_of(UniPoly([1, 0, 1]), "x")
        assert isinstance(alpha, ResidueElement)
        assert alpha * alpha + 1 == 0

    def test_field_for_factor(self):
        from src.poly import UniPoly
        from src.residue_field import field_for_factor

        assert field_for_factor(UniPoly([-1, 1])) is None
        assert field_for_factor(UniPoly([1, 0, 1])).degree == 2

    def test_irreducibility(self):
        from src.poly import UniPoly
        from src.residue_field import is_irreducible_over_q

        assert is_irreducible_over_q(UniPoly([1, 0, 1]))
        assert not is_irreducible_over_q(UniPoly([-1, 0, 1]))
