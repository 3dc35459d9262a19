import unittest
from fractions import Fraction

from src.exactmath.univariate import UnivariatePoly, format_factored, rational_roots


class TestUnivariatePoly(unittest.TestCase):
    """Test cases for univariate polynomials in s."""

    def test_from_roots(self):
        """Test building (s+1)(s+1/2) from its roots."""
        b = UnivariatePoly.from_roots([(Fraction(-1), 1), (Fraction(-1, 2), 1)])
        self.assertEqual((Fraction(1, 2), Fraction(3, 2), Fraction(1)), b.coefficients)
        self.assertEqual(2, b.degree())

    def test_evaluate_and_shift(self):
        """Test evaluation and the substitution s -> s + a."""
        b = UnivariatePoly((Fraction(1), Fraction(1)))
        self.assertEqual(Fraction(0), b(-1))
        self.assertEqual((Fraction(0), Fraction(1)), b.shift(-1).coefficients)

    def test_monic(self):
        """Test normalization of the leading coefficient."""
        b = UnivariatePoly((Fraction(2), Fraction(4)))
        self.assertEqual((Fraction(1, 2), Fraction(1)), b.monic().coefficients)
        with self.assertRaises(ValueError):
            UnivariatePoly(()).monic()


class TestRationalRoots(unittest.TestCase):
    """Test cases for exact root extraction."""

    def test_split_polynomial(self):
        """Test that roots come largest first with multiplicities."""
        b = UnivariatePoly.from_roots([(Fraction(-1), 2), (Fraction(-1, 2), 1)])
        report = rational_roots(b)
        self.assertTrue(report.splits)
        self.assertEqual(((Fraction(-1, 2), 1), (Fraction(-1), 2)), report.roots)

    def test_irreducible_cofactor(self):
        """Test that s^2 + 1 is reported, not raised."""
        report = rational_roots(UnivariatePoly((Fraction(1), Fraction(0), Fraction(1))))
        self.assertEqual((), report.roots)
        self.assertFalse(report.splits)

    def test_reexpansion(self):
        """Test that leading coefficient, linear factors and cofactor multiply back to b."""
        split = UnivariatePoly.from_roots([(Fraction(-1, 2), 1), (Fraction(3), 2), (Fraction(-7, 6), 1)])
        for b in (
            split * UnivariatePoly((Fraction(6),)),
            split * UnivariatePoly((Fraction(2), Fraction(0), Fraction(1))),
            UnivariatePoly((Fraction(1), Fraction(0), Fraction(0), Fraction(-3, 2))),
        ):
            with self.subTest(b=str(b)):
                report = rational_roots(b)
                scale = UnivariatePoly((report.leading_coefficient,))
                self.assertEqual(b, scale * UnivariatePoly.from_roots(report.roots) * report.cofactor)

    def test_zero_polynomial(self):
        """Test that the zero polynomial is rejected."""
        with self.assertRaises(ValueError):
            rational_roots(UnivariatePoly(()))


class TestFormatFactored(unittest.TestCase):
    """Test cases for the factored text form."""

    def test_cusp_order(self):
        """Test ordering by denominator, then by decreasing root."""
        roots = [(Fraction(-5, 6), 1), (Fraction(-1), 1), (Fraction(-7, 6), 1)]
        self.assertEqual("(s+1)(s+5/6)(s+7/6)", format_factored(roots))

    def test_powers_and_zero(self):
        """Test repeated and zero roots."""
        self.assertEqual("(s+1)^2", format_factored([(Fraction(-1), 2)]))
        self.assertEqual("(s)", format_factored([(Fraction(0), 1)]))
        self.assertEqual("1", format_factored([]))


if __name__ == "__main__":
    unittest.main()
