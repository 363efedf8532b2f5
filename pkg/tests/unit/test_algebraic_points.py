"""Tests for src/algebraic_points.py."""
from fractions import Fraction

import pytest


def xy(text: str):
    from src.poly_parser import parse_poly

    return parse_poly(text)


class TestCommonZeros:
    def test_rational_points_sorted(self):
        from src.algebraic_points import common_zeros, describe_class

        classes = common_zeros([xy("x^2 - 1"), xy("y - x")])
        assert [describe_class(pc) for pc in classes] == ["(-1, -1)", "(1, 1)"]

    def test_conjugate_class_over_rational_x(self, e1):
        from src.algebraic_points import common_zeros, describe_class

        classes = common_zeros([e1.P, e1.Q])
        assert len(classes) == 1
        assert classes[0].size == 2
        assert not classes[0].is_rational
        assert describe_class(classes[0]) == "{x + 1 = 0, y^2 + 1 = 0}"

    def test_approximations_attached(self, e1):
        from src.algebraic_points import common_zeros

        pc = common_zeros([e1.P, e1.Q])[0]
        assert len(pc.approx) == 2
        for x_value, y_value in pc.approx:
            assert abs(x_value + 1) < 1e-9
            assert abs(abs(y_value.imag) - 1) < 1e-9

    def test_irrational_x_coordinate(self):
        from src.algebraic_points import common_zeros, point_coordinates

        classes = common_zeros([xy("x^2 - 2"), xy("y - x")])
        assert len(classes) == 1
        alpha, beta = point_coordinates(classes[0])
        assert alpha * alpha == 2
        assert beta == alpha

    def test_no_common_zero(self):
        from src.algebraic_points import common_zeros

        assert common_zeros([xy("x"), xy("x - 1")]) == []

    def test_constant_input(self):
        from src.algebraic_points import common_zeros

        assert common_zeros([xy("x*y"), xy("3")]) == []

    def test_single_curve_raises(self):
        from src.algebraic_points import common_zeros
        from src.errors import InfinitelyManyEquilibria

        with pytest.raises(InfinitelyManyEquilibria):
            common_zeros([xy("x^2 + y^2 - 1")])

    def test_common_vertical_component_raises(self):
        from src.algebraic_points import common_zeros
        from src.errors import InfinitelyManyEquilibria

        with pytest.raises(InfinitelyManyEquilibria):
            common_zeros([xy("x*y"), xy("x*(y + 1)")])


class TestPointCoordinates:
    def test_rational(self):
        from src.algebraic_points import common_zeros, point_coordinates

        pc = common_zeros([xy("x - 1/2"), xy("y + 3")])[0]
        assert point_coordinates(pc) == (Fraction(1, 2), Fraction(-3))

    def test_rational_x_residue_y(self, e1):
        from src.algebraic_points import common_zeros, point_coordinates

        x0, y0 = point_coordinates(common_zeros([e1.P, e1.Q])[0])
        assert x0 == -1
        assert y0 * y0 == -1

    def test_rational_point_rejects_class(self, e1):
        from src.algebraic_points import common_zeros, rational_point

        with pytest.raises(ValueError, match="not rational"):
            rational_point(common_zeros([e1.P, e1.Q])[0])


class TestProjectiveZeros:
    def test_three_rational_points(self):
        from src.algebraic_points import projective_zeros
        from src.poly import HomogeneousForm

        points = projective_zeros(HomogeneousForm.of(xy("x^2*y - y^3")))
        assert [p.coords for p in points] == [(1, 0), (1, 1), (1, -1)]
        assert all(p.multiplicity == 1 for p in points)

    def test_vertical_point_with_multiplicity(self):
        from src.algebraic_points import projective_zeros
        from src.poly import HomogeneousForm

        points = projective_zeros(HomogeneousForm.of(xy("3*x^3")))
        assert len(points) == 1
        assert points[0].coords == (0, 1)
        assert points[0].multiplicity == 3

    def test_irrational_class(self):
        from src.algebraic_points import projective_zeros
        from src.poly import HomogeneousForm, UniPoly

        points = projective_zeros(HomogeneousForm.of(xy("x^3 + x*y^2")))
        assert points[0].coords == (0, 1)
        assert points[1].coords is None
        assert points[1].factor == UniPoly([1, 0, 1])
        assert points[1].class_size == 2
        assert len(points[1].approx) == 2

    def test_zero_form_raises(self):
        from src.algebraic_points import projective_zeros
        from src.poly import HomogeneousForm

        with pytest.raises(ValueError, match="zero form"):
            projective_zeros(HomogeneousForm({}, 2))
