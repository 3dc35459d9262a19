import unittest
from fractions import Fraction

from src.bfun.bfunction import bernstein_sato, jump_value, lct_from_bfunction, multiplier_membership
from src.exactmath.polynomial import Polynomial


class TestBernsteinSato(unittest.TestCase):
    """Test cases for Bernstein-Sato polynomials."""

    def setUp(self):
        self.vars = ("x", "y")
        self.x = Polynomial.variable(self.vars, "x")
        self.y = Polynomial.variable(self.vars, "y")
        self.cusp = self.x**2 + self.y**3

    def test_smooth(self):
        """Test b_x = s + 1."""
        b = bernstein_sato(Polynomial.variable(("x",), "x"))
        self.assertEqual("(s+1)", b.factored())
        self.assertEqual(((Fraction(-1), 1),), b.roots)

    def test_double_point(self):
        """Test b_(x^2) = (s+1)(s+1/2)."""
        b = bernstein_sato(Polynomial.variable(("x",), "x") ** 2)
        self.assertEqual("(s+1)(s+1/2)", b.factored())
        self.assertEqual(Fraction(-1, 2), b.largest_root)

    def test_cusp(self):
        """Test b of x^2 + y^3."""
        b = bernstein_sato(self.cusp)
        self.assertEqual("(s+1)(s+5/6)(s+7/6)", b.factored())
        self.assertEqual(Fraction(0), b.poly(-1))

    def test_quadric_in_four_variables(self):
        """Test b of x1^2 + ... + x4^2 = (s+1)(s+2)."""
        names = ("x1", "x2", "x3", "x4")
        f = sum((Polynomial.variable(names, v) ** 2 for v in names), Polynomial(names))
        self.assertEqual("(s+1)(s+2)", bernstein_sato(f).factored())

    def test_normal_crossing(self):
        """Test b_(xy) = (s+1)^2."""
        self.assertEqual("(s+1)^2", bernstein_sato(self.x * self.y).factored())

    def test_methods_agree(self):
        """Test that elimination gives the same polynomial as the linear search."""
        f = Polynomial.variable(("x",), "x") ** 2
        self.assertEqual(bernstein_sato(f).poly, bernstein_sato(f, method="elimination").poly)

    def test_numerator(self):
        """Test b_(x^2, x): the jump value of x is 1."""
        f = Polynomial.variable(("x",), "x") ** 2
        h = Polynomial.variable(("x",), "x")
        self.assertEqual(Fraction(1), jump_value(f, h))

    def test_shifted_polynomial(self):
        """Test the reported shift b_f(s - 1)."""
        b = bernstein_sato(Polynomial.variable(("x",), "x"))
        self.assertEqual((Fraction(0), Fraction(1)), b.b_z().coefficients)

    def test_constant_is_rejected(self):
        """Test that a constant f is rejected."""
        with self.assertRaises(ValueError):
            bernstein_sato(Polynomial.constant(self.vars, 1))

    def test_unknown_method(self):
        """Test that an unknown method is rejected."""
        with self.assertRaises(ValueError):
            bernstein_sato(self.x, method="magic")


class TestThresholds(unittest.TestCase):
    """Test cases for thresholds read off b-functions."""

    def setUp(self):
        self.vars = ("x", "y")
        self.x = Polynomial.variable(self.vars, "x")
        self.y = Polynomial.variable(self.vars, "y")

    def test_lct(self):
        """Test lct of the cusp and of x^2."""
        self.assertEqual(Fraction(5, 6), lct_from_bfunction(self.x**2 + self.y**3))
        self.assertEqual(Fraction(1, 2), lct_from_bfunction(Polynomial.variable(("x",), "x") ** 2))

    def test_cusp_multiplier_ideals(self):
        """Test J(alpha) is the whole ring below 5/6 and the maximal ideal on [5/6, 1)."""
        f = self.x**2 + self.y**3
        one = Polynomial.constant(self.vars, 1)
        self.assertTrue(multiplier_membership(f, one, Fraction(4, 5)))
        self.assertFalse(multiplier_membership(f, one, Fraction(5, 6)))
        for h in (self.x, self.y, self.x * self.y, self.y**2):
            with self.subTest(h=str(h)):
                self.assertTrue(multiplier_membership(f, h, Fraction(5, 6)))
                self.assertTrue(multiplier_membership(f, h, Fraction(9, 10)))

    def test_alpha_must_be_positive(self):
        """Test that alpha <= 0 is rejected."""
        with self.assertRaises(ValueError):
            multiplier_membership(self.x, self.x, Fraction(0))


if __name__ == "__main__":
    unittest.main()
