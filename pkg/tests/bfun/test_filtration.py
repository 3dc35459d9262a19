import unittest
from fractions import Fraction

from src.bfun.filtration import ABOVE, monomial_jump_values, monomials_at_jump, v_filtration_table
from src.exactmath.polynomial import Polynomial
from src.newton.ideal import MonomialIdeal
from src.newton.multiplier import jumping_numbers_monomial


class TestMonomialJumpValues(unittest.TestCase):
    """Test cases for jump values of monomial numerators."""

    def setUp(self):
        self.f = Polynomial.variable(("x",), "x") ** 2

    def test_double_point(self):
        """Test alpha_(x^k) = (k+1)/2 for f = x^2."""
        values = monomial_jump_values(self.f, 2)
        self.assertEqual({(0,): Fraction(1, 2), (1,): Fraction(1), (2,): Fraction(3, 2)}, values)
        self.assertEqual([(1,)], monomials_at_jump(values, Fraction(1)))

    def test_pruning_above_limit(self):
        """Test that multiples of a monomial above the limit are not computed."""
        x = Polynomial.variable(("x", "y"), "x")
        y = Polynomial.variable(("x", "y"), "y")
        values = monomial_jump_values(x**2 + y**3, 2, alpha_limit=Fraction(5, 6))
        self.assertEqual(Fraction(5, 6), values[(0, 0)])
        self.assertEqual(ABOVE, values[(1, 1)])

    def test_workers_do_not_change_results(self):
        """Test that worker processes give the same values."""
        self.assertEqual(monomial_jump_values(self.f, 3), monomial_jump_values(self.f, 3, workers=3))


class TestVFiltrationTable(unittest.TestCase):
    """Test cases for truncated multiplier ideal tables."""

    def test_double_point(self):
        """Test the table of x^2 up to degree 2."""
        table = v_filtration_table(Polynomial.variable(("x",), "x") ** 2, 2, Fraction(1))
        self.assertEqual((Fraction(1, 2), Fraction(1)), table.alphas)
        self.assertEqual(((1,),), table.ideal_at(Fraction(1, 2)))
        self.assertEqual(((2,),), table.ideal_at(Fraction(1)))
        self.assertIsNone(table.ideal_at(Fraction(1, 3)))
        self.assertFalse(table.entries[0].complete)

    def test_cusp(self):
        """Test that the cusp drops to the maximal ideal at 5/6 and loses degree <= 2 at 1."""
        x = Polynomial.variable(("x", "y"), "x")
        y = Polynomial.variable(("x", "y"), "y")
        table = v_filtration_table(x**2 + y**3, 2, Fraction(1))
        self.assertEqual((Fraction(5, 6), Fraction(1)), table.alphas)
        self.assertEqual(((0, 1), (1, 0)), table.ideal_at(Fraction(5, 6)))
        self.assertEqual((), table.ideal_at(Fraction(1)))

    def test_bounds(self):
        """Test that non-positive alpha_max is rejected."""
        with self.assertRaises(ValueError):
            v_filtration_table(Polynomial.variable(("x",), "x"), 2, Fraction(0))


class TestAgreementWithNewton(unittest.TestCase):
    """Test cases comparing b-function tables with Newton polyhedron tables for monomial f."""

    def assertTablesAgree(self, f, degree_bound, alpha_max):
        by_bfunction = v_filtration_table(f, degree_bound, alpha_max)
        by_newton = jumping_numbers_monomial(MonomialIdeal(tuple(f.terms), len(f.variables)), alpha_max, degree_bound)
        self.assertEqual(by_newton.alphas, by_bfunction.alphas)
        for alpha in by_newton.alphas:
            with self.subTest(alpha=str(alpha)):
                self.assertEqual(by_newton.ideal_at(alpha), by_bfunction.ideal_at(alpha))

    def test_double_point(self):
        """Test f = x^2 up to alpha 2."""
        self.assertTablesAgree(Polynomial.variable(("x",), "x") ** 2, 4, Fraction(2))

    def test_normal_crossing(self):
        """Test f = x y up to alpha 2."""
        x = Polynomial.variable(("x", "y"), "x")
        y = Polynomial.variable(("x", "y"), "y")
        self.assertTablesAgree(x * y, 4, Fraction(2))


if __name__ == "__main__":
    unittest.main()
