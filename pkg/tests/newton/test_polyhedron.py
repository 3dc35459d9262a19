import unittest
from fractions import Fraction

from src.newton.ideal import MonomialIdeal, minimal_monomials
from src.newton.polyhedron import Facet, newton_polyhedron, polyhedron_of_points


class TestMonomialIdeal(unittest.TestCase):
    """Test cases for monomial ideals."""

    def test_minimal_generators(self):
        """Test that redundant generators are dropped."""
        ideal = MonomialIdeal(((2, 0), (1, 0), (0, 1)), 2)
        self.assertEqual(((0, 1), (1, 0)), ideal.generators)
        self.assertTrue(ideal.contains((3, 1)))
        self.assertFalse(ideal.is_unit())
        self.assertEqual("(y, x)", ideal.format(("x", "y")))

    def test_minimal_monomials_order(self):
        """Test sorting by degree, then lex."""
        self.assertEqual(((0, 2), (1, 1)), minimal_monomials([(1, 1), (0, 2), (1, 2)]))

    def test_negative_exponent(self):
        """Test that negative exponents are rejected."""
        with self.assertRaises(ValueError):
            MonomialIdeal(((-1, 0),), 2)


class TestNewtonPolyhedron(unittest.TestCase):
    """Test cases for Newton polyhedra."""

    def test_three_edges(self):
        """Test the facets of (x1 x2, x2 x3, x1 x3)."""
        ideal = MonomialIdeal(((1, 1, 0), (0, 1, 1), (1, 0, 1)), 3)
        poly = newton_polyhedron(ideal)
        bounded = {(f.normal, f.offset) for f in poly.bounded_facets}
        self.assertIn(((1, 1, 1), 2), bounded)
        self.assertIn(((1, 1, 0), 1), bounded)
        self.assertEqual(Fraction(3, 2), poly.threshold((0, 0, 0)))
        self.assertEqual(Fraction(2), poly.threshold((1, 0, 0)))

    def test_maximal_ideal(self):
        """Test that (x, y) has the single bounded facet u1 + u2 >= 1."""
        poly = newton_polyhedron(MonomialIdeal(((1, 0), (0, 1)), 2))
        self.assertEqual((Facet((1, 1), 1),), poly.bounded_facets)
        self.assertTrue(poly.contains((1, 0)))
        self.assertFalse(poly.contains((Fraction(1, 3), Fraction(1, 3))))
        self.assertEqual("u1 + u2 >= 1", str(poly.bounded_facets[0]))

    def test_dimension_cap(self):
        """Test that dimensions above the cap are refused."""
        with self.assertRaises(ValueError):
            polyhedron_of_points([(1,) * 7], 7)
        with self.assertRaises(ValueError):
            polyhedron_of_points([(1, 1, 1)], 3, dimension_cap=2)


if __name__ == "__main__":
    unittest.main()
