import random
import unittest
from fractions import Fraction

from src.exactmath.polynomial import Polynomial, monomials_up_to, poly_arith, to_fraction


class TestPolynomial(unittest.TestCase):
    """Test cases for exact multivariate polynomials."""

    def setUp(self):
        self.vars = ("x", "y")
        self.x = Polynomial.variable(self.vars, "x")
        self.y = Polynomial.variable(self.vars, "y")

    def test_zero_coefficients_are_dropped(self):
        """Test that zero terms never appear in the term map."""
        p = Polynomial(self.vars, {(1, 0): 1, (0, 1): 0})
        self.assertEqual({(1, 0): Fraction(1)}, p.terms)
        self.assertTrue((self.x - self.x).is_zero())

    def test_square_of_sum(self):
        """Test multiplication and powers."""
        p = (self.x + self.y) ** 2
        self.assertEqual({(2, 0): 1, (1, 1): 2, (0, 2): 1}, p.terms)

    def test_rational_coefficients_stay_exact(self):
        """Test that coefficients are Fractions, not floats."""
        p = self.x.scale(Fraction(1, 3)) * 3
        self.assertEqual(self.x, p)
        self.assertIsInstance(p.terms[(1, 0)], Fraction)

    def test_ring_mismatch(self):
        """Test that polynomials over different variables do not combine."""
        z = Polynomial.variable(("z",), "z")
        with self.assertRaises(ValueError):
            self.x + z

    def test_str_in_descending_order(self):
        """Test the canonical text form."""
        p = self.x - self.y.scale(Fraction(1, 2)) + 3
        self.assertEqual("x - 1/2*y + 3", str(p))
        self.assertEqual("0", str(Polynomial(self.vars)))

    def test_diff(self):
        """Test partial derivatives."""
        p = self.x**2 * self.y
        self.assertEqual(self.x * self.y * 2, p.diff("x"))
        self.assertEqual(self.x**2, p.diff("y"))

    def test_substitute(self):
        """Test composition in one variable."""
        p = (self.x**2).substitute("x", self.y + 1)
        self.assertEqual(self.y**2 + self.y * 2 + 1, p)

    def test_extend_and_restrict(self):
        """Test embedding into a larger ring and back."""
        p = self.x**2 + self.y
        wide = p.extend(("x", "y", "s"))
        self.assertEqual({(2, 0, 0): 1, (0, 1, 0): 1}, wide.terms)
        self.assertEqual(p, wide.restrict(self.vars))
        with self.assertRaises(ValueError):
            wide.restrict(("x",))

    def test_sympy_conversion(self):
        """Test conversion to and from sympy."""
        p = self.x**3 + self.y.scale(Fraction(2, 5))
        self.assertEqual(p, Polynomial.from_sympy(p.to_sympy(), self.vars))

    def test_queries(self):
        """Test degree and shape queries."""
        p = self.x**2 * self.y + 4
        self.assertEqual(3, p.total_degree())
        self.assertEqual(2, p.degree("x"))
        self.assertEqual(Fraction(4), p.constant_value())
        self.assertFalse(p.is_monomial())
        self.assertTrue((self.x * self.y).is_monomial())
        self.assertTrue(Polynomial.constant(self.vars, 7).is_constant())

    def test_poly_arith(self):
        """Test the named arithmetic entry point."""
        self.assertEqual(self.x * self.y, poly_arith(self.x, self.y, "mul"))
        self.assertEqual(self.x - self.y, poly_arith(self.x, self.y, "sub"))
        with self.assertRaises(ValueError):
            poly_arith(self.x, self.y, "div")

    def test_to_fraction(self):
        """Test conversion of scalars."""
        self.assertEqual(Fraction(3, 4), to_fraction(Fraction(3, 4)))
        self.assertEqual(Fraction(5), to_fraction(5))

    def test_exact_quotient(self):
        """Test division that leaves no remainder, and refusal otherwise."""
        f = self.x**2 + self.y**3
        self.assertEqual(self.x - self.y, (f * (self.x - self.y)).exact_quotient(f))
        self.assertIsNone((f + 1).exact_quotient(f))
        self.assertTrue(Polynomial(self.vars).exact_quotient(f).is_zero())
        with self.assertRaises(ZeroDivisionError):
            f.exact_quotient(Polynomial(self.vars))


class TestRingLaws(unittest.TestCase):
    """Test cases for the ring axioms on random polynomials."""

    def setUp(self):
        self.vars = ("x", "y", "z")
        self.rng = random.Random(20240)

    def random_polynomial(self):
        terms = {}
        for _ in range(self.rng.randint(0, 4)):
            exps = tuple(self.rng.randint(0, 3) for _ in self.vars)
            terms[exps] = Fraction(self.rng.randint(-5, 5), self.rng.randint(1, 4))
        return Polynomial(self.vars, terms)

    def test_associativity(self):
        """Test (a b) c = a (b c) and (a + b) + c = a + (b + c)."""
        for _ in range(25):
            a, b, c = (self.random_polynomial() for _ in range(3))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual((a + b) + c, a + (b + c))

    def test_distributivity(self):
        """Test a (b + c) = a b + a c and (a + b) c = a c + b c."""
        for _ in range(25):
            a, b, c = (self.random_polynomial() for _ in range(3))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual((a + b) * c, a * c + b * c)

    def test_commutativity_and_identities(self):
        """Test a b = b a, a + 0 = a, a * 1 = a and a - a = 0."""
        one = Polynomial.constant(self.vars, 1)
        for _ in range(25):
            a, b = self.random_polynomial(), self.random_polynomial()
            self.assertEqual(a * b, b * a)
            self.assertEqual(a, a + Polynomial(self.vars))
            self.assertEqual(a, a * one)
            self.assertTrue((a - a).is_zero())


class TestMonomialsUpTo(unittest.TestCase):
    """Test cases for monomial enumeration."""

    def test_order(self):
        """Test that monomials come by degree, then lex."""
        expected = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
        self.assertEqual(expected, monomials_up_to(2, 2))

    def test_count(self):
        """Test the number of monomials of degree at most 3 in 3 variables."""
        self.assertEqual(20, len(monomials_up_to(3, 3)))


if __name__ == "__main__":
    unittest.main()
