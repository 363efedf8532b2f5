"""Tests for src/poly.py."""
from fractions import Fraction

import pytest


def xy(text: str):
    from src.poly_parser import parse_poly

    return parse_poly(text)


class TestUniPoly:
    def test_trailing_zeros_dropped(self):
        from src.poly import UniPoly

        u = UniPoly([1, 2, 0, 0])
        assert u.degree == 1
        assert u.coeffs == (Fraction(1), Fraction(2))

    def test_zero_has_degree_minus_one(self):
        from src.poly import UniPoly

        assert UniPoly().degree == -1
        assert UniPoly().is_zero

    def test_divmod(self):
        from src.poly import UniPoly

        q, r = divmod(UniPoly([-1, 0, 1]), UniPoly([-1, 1]))
        assert q == UniPoly([1, 1])
        assert r.is_zero

    def test_division_by_zero_raises(self):
        from src.errors import DivisionByZeroPolynomial
        from src.poly import UniPoly

        with pytest.raises(DivisionByZeroPolynomial):
            divmod(UniPoly([1, 1]), UniPoly())

    def test_exact_quotient_raises_on_remainder(self):
        from src.poly import UniPoly

        with pytest.raises(ArithmeticError, match="does not divide"):
            UniPoly([1, 0, 1]).exact_quotient(UniPoly([-1, 1]))

    def test_gcd_is_monic(self):
        from src.poly import UniPoly, uni_gcd

        a = UniPoly([-2, 0, 2])   # 2(z² − 1)
        b = UniPoly([3, 3])       # 3(z + 1)
        assert uni_gcd(a, b) == UniPoly([1, 1])

    def test_squarefree_decomposition(self):
        from src.poly import UniPoly, squarefree_decomposition

        u = UniPoly([0, 0, 1]) * UniPoly([1, 1])   # z²(z + 1)
        assert squarefree_decomposition(u) == [(UniPoly([1, 1]), 1), (UniPoly([0, 1]), 2)]

    def test_text(self):
        from src.poly import UniPoly

        assert UniPoly([1, 0, -1]).to_text("v") == "-v^2 + 1"


class TestFactorOverQ:
    def test_splits_rational_roots(self):
        from src.poly import UniPoly, factor_over_q

        factors = factor_over_q(UniPoly([0, 1, 0, -1]))   # z − z³
        assert factors == [
            (UniPoly([-1, 1]), 1),
            (UniPoly([0, 1]), 1),
            (UniPoly([1, 1]), 1),
        ]

    def test_keeps_irreducible_quadratic(self):
        from src.poly import UniPoly, factor_over_q

        factors = factor_over_q(UniPoly([2, 0, 2]))
        assert factors == [(UniPoly([1, 0, 1]), 1)]

    def test_multiplicity(self):
        from src.poly import UniPoly, factor_over_q

        assert factor_over_q(UniPoly([1, 2, 1])) == [(UniPoly([1, 1]), 2)]

    def test_constant_has_no_factors(self):
        from src.poly import UniPoly, factor_over_q

        assert factor_over_q(UniPoly([5])) == []


class TestBiPolyArithmetic:
    def test_canonical_equality(self):
        assert xy("(x + y)^2") == xy("x^2 + 2*x*y + y^2")

    def test_zero_terms_dropped(self):
        assert xy("x - x").is_zero
        assert xy("x - x").degree == -1

    def test_product_degree(self):
        f = xy("x^2 + y")
        g = xy("y^3 - 1")
        assert (f * g).degree == 5

    def test_diff(self):
        f = xy("x^2*y - y^3")
        assert f.diff("x") == xy("2*x*y")
        assert f.diff("y") == xy("x^2 - 3*y^2")

    def test_evaluate(self):
        assert xy("x^2 + y").evaluate(Fraction(1, 2), Fraction(3)) == Fraction(13, 4)

    def test_translate(self):
        assert xy("y^2 - x^3").translate(1, 1) == xy("(y + 1)^2 - (x + 1)^3")

    def test_swap(self):
        assert xy("x^2 + 3*y").swap() == xy("y^2 + 3*x")

    def test_monic_uses_graded_lex_leader(self):
        assert xy("2*x*y + 4*y^2 + 6").monic() == xy("x*y + 2*y^2 + 3")

    def test_homogeneous_parts(self):
        parts = xy("1 + y^2").homogeneous_parts()
        assert [p.is_zero for p in parts] == [False, True, False]

    def test_lowest_degree(self):
        assert xy("y^2 - x^2 - x^3").lowest_degree() == 2


class TestText:
    def test_rational_coefficients(self):
        assert xy("x^2 - 3/2*x*y + 1").to_text() == "x^2 - 3/2*x*y + 1"

    def test_negative_leader(self):
        assert xy("-y^2 + x").to_text() == "-y^2 + x"

    def test_custom_variables(self):
        assert xy("x*y + 1").to_text(("u", "v")) == "u*v + 1"


class TestExactDivide:
    def test_divisible(self):
        from src.poly import exact_divide

        assert exact_divide(xy("x^2 - y^2"), xy("x + y")) == xy("x - y")

    def test_not_divisible_returns_none(self):
        from src.poly import exact_divide

        assert exact_divide(xy("1 + y^2"), xy("x")) is None

    def test_zero_divisor_raises(self):
        from src.errors import DivisionByZeroPolynomial
        from src.poly import BiPoly, exact_divide

        with pytest.raises(DivisionByZeroPolynomial):
            exact_divide(xy("x"), BiPoly.zero())


class TestHomogeneousForms:
    def test_rejects_mixed_degrees(self):
        from src.poly import HomogeneousForm

        with pytest.raises(ValueError, match="Not homogeneous"):
            HomogeneousForm.of(xy("x^2 + y"))

    def test_dehomogenize(self):
        from src.poly import HomogeneousForm, UniPoly

        h = HomogeneousForm.of(xy("x^2*y - y^3"))
        assert h.dehomogenize() == UniPoly([0, 1, 0, -1])

    def test_x_multiplicity(self):
        from src.poly import HomogeneousForm

        assert HomogeneousForm.of(xy("3*x^3")).x_multiplicity() == 3
        assert HomogeneousForm.of(xy("x^2*y")).x_multiplicity() == 2

    def test_squarefree_part_keeps_x(self):
        from src.poly import HomogeneousForm, squarefree_part

        assert squarefree_part(HomogeneousForm.of(xy("3*x^3"))) == xy("x")

    def test_factor_linear_rational(self):
        from src.poly import HomogeneousForm, factor_linear_rational

        factors, remainder = factor_linear_rational(HomogeneousForm.of(xy("x^2*y - y^3")))
        assert [f for f, _ in factors] == [xy("y"), xy("x - y"), xy("x + y")]
        assert all(mult == 1 for _, mult in factors)
        assert remainder.form_degree == 0

    def test_factor_linear_rational_remainder(self):
        from src.poly import HomogeneousForm, factor_linear_rational

        factors, remainder = factor_linear_rational(HomogeneousForm.of(xy("x^3 + x*y^2")))
        assert [f for f, _ in factors] == [xy("x")]
        assert remainder.form_degree == 2


RANDOM_DRAWS = 25


def random_poly(rng, degree: int):
    from src.poly import BiPoly

    terms = {}
    for d in range(degree + 1):
        for i in range(d + 1):
            if rng.random() < 0.6:
                terms[(i, d - i)] = Fraction(rng.randint(-4, 4), rng.choice([1, 1, 2, 3]))
    terms[(degree, 0)] = Fraction(rng.choice([-2, -1, 1, 2]))
    return BiPoly(terms)


def random_linear_form(rng):
    from src.poly import BiPoly

    a, b = 0, 0
    while a == 0 and b == 0:
        a, b = rng.randint(-3, 3), rng.randint(-3, 3)
    return BiPoly({(1, 0): a, (0, 1): b})


class TestRandomizedLaws:
    def test_ring_laws(self):
        import random

        rng = random.Random(11)
        for _ in range(RANDOM_DRAWS):
            f, g, h = (random_poly(rng, rng.randint(0, 3)) for _ in range(3))
            assert (f + g) + h == f + (g + h)
            assert f * g == g * f
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h
            assert (f - f).is_zero
            assert (f * g).degree == f.degree + g.degree

    def test_text_round_trip(self):
        import random

        from src.poly_parser import parse_poly

        rng = random.Random(12)
        for _ in range(RANDOM_DRAWS):
            f = random_poly(rng, rng.randint(0, 4))
            assert parse_poly(f.to_text()) == f

    def test_exact_divide_recovers_quotient(self):
        import random

        from src.poly import exact_divide

        rng = random.Random(13)
        for _ in range(RANDOM_DRAWS):
            f = random_poly(rng, rng.randint(0, 3))
            g = random_poly(rng, rng.randint(0, 3))
            assert exact_divide(f * g, g) == f

    def test_squarefree_part_is_idempotent(self):
        import random

        from src.poly import BiPoly, HomogeneousForm, exact_divide, squarefree_part

        rng = random.Random(14)
        for _ in range(RANDOM_DRAWS):
            product = BiPoly.constant(rng.choice([-3, 1, 2]))
            for _ in range(rng.randint(1, 4)):
                product = product * random_linear_form(rng) ** rng.randint(1, 3)
            h = HomogeneousForm.of(product)
            s = squarefree_part(h)
            assert squarefree_part(s) == s
            assert exact_divide(h, s) is not None

    def test_factor_linear_rational_multiplies_back(self):
        import random

        from src.poly import BiPoly, HomogeneousForm, factor_linear_rational

        rng = random.Random(15)
        for _ in range(RANDOM_DRAWS):
            product = xy("x^2 + x*y + y^2") if rng.random() < 0.5 else BiPoly.constant(1)
            for _ in range(rng.randint(1, 3)):
                product = product * random_linear_form(rng) ** rng.randint(1, 2)
            factors, remainder = factor_linear_rational(HomogeneousForm.of(product))
            rebuilt = BiPoly(dict(remainder.terms))
            for form, mult in factors:
                rebuilt = rebuilt * form ** mult
            assert rebuilt.monic() == product.monic()
