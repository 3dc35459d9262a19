"""Exact rational arithmetic, polynomials, commutative Gröbner bases and root extraction."""

from src.exactmath.groebner import commutative_groebner, is_zero_dimensional, standard_monomials
from src.exactmath.linalg import solve_linear
from src.exactmath.polynomial import Monomial, Polynomial, Rational, monomials_up_to, poly_arith, to_fraction
from src.exactmath.univariate import RootReport, UnivariatePoly, format_factored, rational_roots

__all__ = [
    "Monomial",
    "Polynomial",
    "Rational",
    "RootReport",
    "UnivariatePoly",
    "commutative_groebner",
    "format_factored",
    "is_zero_dimensional",
    "monomials_up_to",
    "poly_arith",
    "rational_roots",
    "solve_linear",
    "standard_monomials",
    "to_fraction",
]
