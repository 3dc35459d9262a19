import unittest
from fractions import Fraction
from unittest.mock import patch

from src.exactmath.univariate import UnivariatePoly
from src.newton.ideal import MonomialIdeal
from src.parsers.polynomial import OperatorParser, parse_polynomial
from src.routes import BFunctionRoute, NewtonRoute, Request, SpectrumRoute


def edges_request(command, alpha=None):
    variables = ("x1", "x2", "x3")
    ideal = MonomialIdeal.from_polynomials([parse_polynomial(g, variables) for g in ("x1*x2", "x2*x3", "x1*x3")])
    return Request(command=command, variables=variables, ideal=ideal, alpha=alpha)


def polynomial_request(command, src, variables=("x", "y"), **kwargs):
    return Request(command=command, variables=variables, functions=(parse_polynomial(src, variables),), **kwargs)


class TestNewtonRoute(unittest.TestCase):
    """Test cases for the Newton polyhedron route."""

    def test_default_config(self):
        """Test the default configuration and metadata."""
        route = NewtonRoute()
        self.assertEqual(6, route.config["dimension_cap"])
        self.assertFalse(route.config["verbose_logging"])
        self.assertEqual("newton", route.get_metadata()["route"])

    def test_invalid_dimension_cap(self):
        """Test that a non-positive cap is rejected."""
        with self.assertRaises(ValueError):
            NewtonRoute({"dimension_cap": 0})

    def test_invalid_bfunction_settings(self):
        """Test that the b-function settings are validated like on the b-function route."""
        for config in ({"method": "guess"}, {"ann_method": "fast"}, {"workers": 0}, {"max_bfunction_degree": 0}):
            with self.subTest(config=config):
                with self.assertRaises(ValueError):
                    NewtonRoute(config)

    def test_inner_passes_bfunction_settings(self):
        """Test that polynomial `inner` receives the configured b-function settings."""
        route = NewtonRoute({"method": "elimination", "ann_method": "oaku", "max_bfunction_degree": 12, "workers": 2})
        request = polynomial_request("inner", "x^2+y^3", alpha=Fraction(5, 6), degree_bound=3)
        with patch("src.routes.newton.inner_jumping_multiplicity", return_value=1) as inner:
            outcome = route.execute(request)
        self.assertEqual(1, outcome.result["inner_multiplicity"])
        kwargs = inner.call_args.kwargs
        self.assertEqual("elimination", kwargs["method"])
        self.assertEqual("oaku", kwargs["ann_method"])
        self.assertEqual(12, kwargs["max_degree"])
        self.assertEqual(2, kwargs["workers"])

    def test_lct(self):
        """Test the threshold of the edge ideal of a triangle."""
        outcome = NewtonRoute().execute(edges_request("lct"))
        self.assertEqual({"lct": "3/2"}, outcome.result)
        self.assertEqual(["lct = 3/2"], outcome.text)

    def test_single_ideal(self):
        """Test one multiplier ideal of the edge ideal."""
        outcome = NewtonRoute().execute(edges_request("mult-table", Fraction(3, 2)))
        self.assertEqual("(x3, x2, x1)", outcome.result["ideal"])

    def test_jumping_numbers_with_checks(self):
        """Test jumping numbers and that their cross-checks pass."""
        outcome = NewtonRoute().execute(edges_request("jumping"))
        self.assertEqual(["3/2", "2"], outcome.result["jumping_numbers"])
        self.assertTrue(all(check["passed"] for check in outcome.cross_checks))

    def test_inner_on_maximal_ideal(self):
        """Test the inner multiplicity of (x, y) at 2."""
        request = Request(
            command="inner",
            variables=("x", "y"),
            ideal=MonomialIdeal.from_polynomials([parse_polynomial(g, ("x", "y")) for g in ("x", "y")]),
            alpha=Fraction(2),
        )
        self.assertEqual(1, NewtonRoute().execute(request).result["inner_multiplicity"])

    def test_inner_needs_alpha(self):
        """Test that inner without --alpha is a usage error."""
        with self.assertRaises(ValueError):
            NewtonRoute().execute(polynomial_request("inner", "x^2+y^3"))

    def test_missing_ideal(self):
        """Test that lct on this route needs a monomial ideal."""
        with self.assertRaises(ValueError):
            NewtonRoute().execute(polynomial_request("lct", "x^2+y^3"))

    def test_unhandled_command(self):
        """Test that foreign commands are rejected."""
        with self.assertRaises(ValueError):
            NewtonRoute().execute(edges_request("bf"))


class TestSpectrumRoute(unittest.TestCase):
    """Test cases for the spectrum route."""

    def test_cusp_spectrum(self):
        """Test the spectrum of the cusp."""
        outcome = SpectrumRoute().execute(polynomial_request("spectrum", "x^2+y^3"))
        self.assertEqual({"5/6": 1, "7/6": 1}, outcome.result["spectrum"])
        self.assertEqual(2, outcome.result["milnor_number"])
        self.assertEqual({"x": "1/2", "y": "1/3"}, outcome.result["weights"])
        self.assertTrue(all(check["passed"] for check in outcome.cross_checks))

    def test_not_quasi_homogeneous(self):
        """Test that an inconsistent support is a usage error."""
        with self.assertRaises(ValueError):
            SpectrumRoute().execute(polynomial_request("spectrum", "x^2+y^3+x*y"))

    def test_check_needs_alpha(self):
        """Test that check-theorem without --alpha is a usage error."""
        with self.assertRaises(ValueError):
            SpectrumRoute().execute(polynomial_request("check-theorem", "x^2+y^3"))

    def test_metadata(self):
        """Test the spectrum route metadata."""
        self.assertEqual(
            {"route": "spectrum", "commands": ["spectrum", "check-theorem"]},
            SpectrumRoute().get_metadata(),
        )


class TestBFunctionRoute(unittest.TestCase):
    """Test cases for the b-function route."""

    def test_default_config(self):
        """Test the default configuration and metadata."""
        route = BFunctionRoute()
        self.assertEqual("linear", route.config["method"])
        self.assertEqual(40, route.config["max_bfunction_degree"])
        self.assertEqual(
            {
                "route": "bfunction",
                "commands": ["bf", "verify", "lct", "mult-table", "jumping", "vfilt"],
                "method": "linear",
                "ann_method": "auto",
                "workers": 1,
            },
            route.get_metadata(),
        )

    def test_invalid_config(self):
        """Test that unknown methods and non-positive bounds are rejected."""
        for config in ({"method": "guess"}, {"ann_method": "fast"}, {"workers": 0}, {"certificate_max_degree": 0}):
            with self.subTest(config=config):
                with self.assertRaises(ValueError):
                    BFunctionRoute(config)

    def test_bf_of_a_coordinate(self):
        """Test b = s + 1 with the certificate dx for f = x."""
        outcome = BFunctionRoute().execute(polynomial_request("bf", "x", variables=("x",)))
        self.assertEqual("(s+1)", outcome.result["b"])
        self.assertEqual("dx", outcome.result["certificate"])
        self.assertEqual("1", outcome.result["jump"])
        self.assertTrue(all(check["passed"] for check in outcome.cross_checks))

    def test_verify_cusp(self):
        """Test the published cusp certificate."""
        variables = ("x", "y")
        operator = OperatorParser({"variables": list(variables)}).parse("(1/27)*dy^3+(1/6)*y*dx^2*dy+(1/8)*x*dx^3+(3/8)*dx^2")
        b = UnivariatePoly.from_polynomial(parse_polynomial("(s+1)(s+5/6)(s+7/6)", ("s",)), "s")
        request = polynomial_request("verify", "x^2+y^3", b=b, operators=(operator,))
        outcome = BFunctionRoute().execute(request)
        self.assertEqual(True, outcome.result["valid"])
        self.assertEqual("valid", outcome.text[0])

    def test_verify_cusp_without_dx2_term(self):
        """Test that the cusp operator without its dx^2 term is rejected."""
        variables = ("x", "y")
        operator = OperatorParser({"variables": list(variables)}).parse("(1/27)*dy^3+(1/6)*y*dx^2*dy+(1/8)*x*dx^3")
        b = UnivariatePoly.from_polynomial(parse_polynomial("(s+1)(s+5/6)(s+7/6)", ("s",)), "s")
        request = polynomial_request("verify", "x^2+y^3", b=b, operators=(operator,))
        outcome = BFunctionRoute().execute(request)
        self.assertEqual(False, outcome.result["valid"])

    def test_verify_needs_b(self):
        """Test that verify without -b is a usage error."""
        with self.assertRaises(ValueError):
            BFunctionRoute().execute(polynomial_request("verify", "x^2+y^3"))

    def test_lct(self):
        """Test the threshold of x^2."""
        outcome = BFunctionRoute().execute(polynomial_request("lct", "x^2", variables=("x",)))
        self.assertEqual({"lct": "1/2"}, outcome.result)

    def test_rejects_monomial_ideal(self):
        """Test that monomial ideals are not taken by this route."""
        with self.assertRaises(ValueError):
            BFunctionRoute().execute(edges_request("lct"))

    def test_several_functions_need_verify(self):
        """Test that bf takes exactly one polynomial."""
        variables = ("x", "y")
        request = Request(
            command="bf",
            variables=variables,
            functions=(parse_polynomial("x", variables), parse_polynomial("y", variables)),
        )
        with self.assertRaises(ValueError):
            BFunctionRoute().execute(request)


if __name__ == "__main__":
    unittest.main()
