from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

import sympy

from src.exactmath.polynomial import Polynomial, to_fraction


@dataclass(frozen=True)
class UnivariatePoly:
    """Dense univariate polynomial over the rationals, lowest degree first."""

    coefficients: Tuple[Fraction, ...]
    var: str = "s"

    def __post_init__(self):
        coeffs = [to_fraction(c) for c in self.coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def from_roots(cls, roots: Sequence[Tuple[Fraction, int]], var: str = "s") -> "UnivariatePoly":
        result = cls((Fraction(1),), var)
        for root, mult in roots:
            for _ in range(mult):
                result = result * cls((-to_fraction(root), Fraction(1)), var)
        return result

    @classmethod
    def from_polynomial(cls, poly: Polynomial, var: str = "s") -> "UnivariatePoly":
        if poly.variables != (var,):
            poly = poly.restrict((var,))
        degree = max(poly.degree(var), 0)
        coeffs = [Fraction(0)] * (degree + 1)
        for (e,), c in poly.terms.items():
            coeffs[e] = c
        return cls(tuple(coeffs), var)

    def to_polynomial(self) -> Polynomial:
        return Polynomial((self.var,), {(i,): c for i, c in enumerate(self.coefficients)})

    def is_zero(self) -> bool:
        return not self.coefficients

    def degree(self) -> int:
        return len(self.coefficients) - 1

    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def monic(self) -> "UnivariatePoly":
        if self.is_zero():
            raise ValueError("the zero polynomial has no monic form")
        lc = self.leading_coefficient()
        return UnivariatePoly(tuple(c / lc for c in self.coefficients), self.var)

    def __add__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (Fraction(0),) * (n - len(self.coefficients))
        b = other.coefficients + (Fraction(0),) * (n - len(other.coefficients))
        return UnivariatePoly(tuple(x + y for x, y in zip(a, b)), self.var)

    def __neg__(self) -> "UnivariatePoly":
        return UnivariatePoly(tuple(-c for c in self.coefficients), self.var)

    def __sub__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        return self + (-other)

    def __mul__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        if self.is_zero() or other.is_zero():
            return UnivariatePoly((), self.var)
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return UnivariatePoly(tuple(out), self.var)

    def __call__(self, value) -> Fraction:
        value = to_fraction(value)
        result = Fraction(0)
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    def shift(self, amount) -> "UnivariatePoly":
        """Return p(var + amount)."""
        amount = to_fraction(amount)
        result = UnivariatePoly((), self.var)
        base = UnivariatePoly((amount, Fraction(1)), self.var)
        for c in reversed(self.coefficients):
            result = result * base + UnivariatePoly((c,), self.var)
        return result

    def to_sympy(self) -> sympy.Poly:
        s = sympy.Symbol(self.var)
        coeffs = [sympy.Rational(c.numerator, c.denominator) for c in reversed(self.coefficients)]
        return sympy.Poly(coeffs or [0], s, domain=sympy.QQ)

    def __str__(self) -> str:
        return str(self.to_polynomial())


@dataclass(frozen=True)
class RootReport:
    """Rational roots with multiplicities plus whatever does not split over Q."""

    roots: Tuple[Tuple[Fraction, int], ...]
    cofactor: UnivariatePoly
    leading_coefficient: Fraction = field(default=Fraction(1))

    @property
    def splits(self) -> bool:
        return self.cofactor.degree() == 0


def rational_roots(b: UnivariatePoly) -> RootReport:
    """
    Factor `b` over the rationals and collect its linear factors.

    Roots are returned with multiplicities, largest root first. Non-linear
    irreducible factors are multiplied into a monic cofactor which is
    reported, not raised, so callers decide how strict to be.
    """
    if b.is_zero():
        raise ValueError("rational_roots needs a nonzero polynomial")
    lc, factors = b.to_sympy().factor_list()
    roots = {}
    cofactor = UnivariatePoly((Fraction(1),), b.var)
    for factor, mult in factors:
        if factor.degree() == 1:
            a1, a0 = factor.all_coeffs()
            root = -to_fraction(a0) / to_fraction(a1)
            roots[root] = roots.get(root, 0) + mult
        else:
            coeffs = [to_fraction(c) for c in reversed(factor.all_coeffs())]
            piece = UnivariatePoly(tuple(coeffs), b.var).monic()
            for _ in range(mult):
                cofactor = cofactor * piece
    ordered = tuple(sorted(roots.items(), key=lambda item: item[0], reverse=True))
    return RootReport(ordered, cofactor, b.leading_coefficient())


def format_factored(roots: Sequence[Tuple[Fraction, int]], var: str = "s") -> str:
    """
    Render a monic split polynomial as a product of linear factors.

    Factors are ordered by the denominator of the root, then by decreasing
    root, so the cusp prints as (s+1)(s+5/6)(s+7/6).
    """
    if not roots:
        return "1"
    parts: List[str] = []
    for root, mult in sorted(roots, key=lambda item: (item[0].denominator, -item[0])):
        c = -root
        if c == 0:
            body = f"({var})"
        elif c > 0:
            body = f"({var}+{c})"
        else:
            body = f"({var}-{-c})"
        if mult > 1:
            body = f"{body}^{mult}"
        parts.append(body)
    return "".join(parts)
