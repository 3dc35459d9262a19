import unittest
from fractions import Fraction

from src.exactmath.polynomial import Polynomial
from src.weyl.ring import WeylRing, normal_order_product


class TestWeylRing(unittest.TestCase):
    """Test cases for the Weyl algebra and its normal ordering."""

    def setUp(self):
        self.ring = WeylRing(("x", "y"), params=("s",))
        self.x, self.y = self.ring.gen("x"), self.ring.gen("y")
        self.dx, self.dy = self.ring.gen("dx"), self.ring.gen("dy")
        self.s = self.ring.gen("s")

    def test_default_derivation_names(self):
        """Test that derivations are named after their variables."""
        self.assertEqual(("x", "y", "dx", "dy", "s"), self.ring.names)
        self.assertEqual("dx", self.ring.partner("x"))
        self.assertIsNone(self.ring.partner("s"))

    def test_commutation_relation(self):
        """Test d_i x_j - x_j d_i = delta_ij."""
        self.assertEqual(self.ring.one(), self.dx * self.x - self.x * self.dx)
        self.assertTrue((self.dx * self.y - self.y * self.dx).is_zero())
        self.assertTrue((self.s * self.dx - self.dx * self.s).is_zero())

    def test_leibniz_expansion(self):
        """Test d^2 x^2 = x^2 d^2 + 4 x d + 2."""
        product = self.dx**2 * self.x**2
        expected = self.x**2 * self.dx**2 + self.x * self.dx * 4 + 2
        self.assertEqual(expected, product)
        self.assertEqual(expected, normal_order_product(self.dx**2, self.x**2))

    def test_associativity(self):
        """Test (a b) c = a (b c) on mixed elements."""
        a = self.dx + self.y * self.s
        b = self.x * self.dy + self.dx**2
        c = self.x**2 * self.y - self.dy
        self.assertEqual((a * b) * c, a * (b * c))

    def test_str(self):
        """Test the normally ordered text form."""
        self.assertEqual("x*dx + 1", str(self.dx * self.x))
        self.assertEqual("1/2*dx^2 - s", str(self.dx**2 * Fraction(1, 2) - self.s))

    def test_homogenized_relation(self):
        """Test d x = x d + h^2 with a homogenizing parameter."""
        ring = WeylRing(("x",), params=("h",), homogenizer="h")
        x, dx, h = ring.gen("x"), ring.gen("dx"), ring.gen("h")
        self.assertEqual(x * dx + h**2, dx * x)

    def test_duplicate_names(self):
        """Test that clashing generator names are rejected."""
        with self.assertRaises(ValueError):
            WeylRing(("x", "dx"))

    def test_from_polynomial_and_back(self):
        """Test the embedding of commutative polynomials."""
        p = Polynomial.variable(("x", "y"), "x") ** 2 + Polynomial.variable(("x", "y"), "y")
        element = self.ring.from_polynomial(p)
        self.assertEqual(self.x**2 + self.y, element)
        self.assertEqual(p.extend(("x", "y", "s")), element.to_polynomial())
        with self.assertRaises(ValueError):
            self.dx.to_polynomial()

    def test_specialize(self):
        """Test setting s to a value."""
        p = self.s**2 * self.dx + self.s
        self.assertEqual(self.dx * 4 + 2, p.specialize("s", 2))
        with self.assertRaises(ValueError):
            p.specialize("x", 1)

    def test_to_ring(self):
        """Test moving elements between rings by name."""
        wide = self.ring.with_params(["_e"])
        moved = (self.x * self.dx + self.s).to_ring(wide)
        self.assertEqual(wide.gen("x") * wide.gen("dx") + wide.gen("s"), moved)
        self.assertEqual(self.x * self.dx + self.s, moved.to_ring(self.ring))

    def test_ring_mismatch(self):
        """Test that elements of different rings do not combine."""
        other = WeylRing(("x",))
        with self.assertRaises(ValueError):
            self.x + other.gen("x")

    def test_involves(self):
        """Test generator occurrence queries."""
        p = self.x * self.dy + self.s
        self.assertTrue(p.involves(["dy"]))
        self.assertFalse(p.involves(["dx", "y"]))
        self.assertTrue(p.has_derivations())


if __name__ == "__main__":
    unittest.main()
