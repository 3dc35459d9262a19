import itertools
import logging
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import sympy

logger = logging.getLogger(__name__)

Rational = Fraction
Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]


def to_fraction(value) -> Fraction:
    """Convert an int, Fraction or sympy rational into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    r = sympy.Rational(value)
    return Fraction(int(r.p), int(r.q))


def grevlex_key(exps: Monomial) -> tuple:
    return (sum(exps), tuple(-e for e in reversed(exps)))


class Polynomial:
    """
    A multivariate polynomial over the rationals.

    Terms are stored sparsely as a map from exponent vectors to nonzero
    Fractions, so two equal polynomials always have identical term maps.
    Instances are treated as immutable.
    """

    __slots__ = ("variables", "terms")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Optional[Mapping[Monomial, Scalar]] = None,
    ):
        self.variables = tuple(variables)
        clean: Dict[Monomial, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != len(self.variables):
                raise ValueError(
                    f"monomial {exps} does not match variables {self.variables}"
                )
            c = to_fraction(coeff)
            if c:
                clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def constant(cls, variables: Sequence[str], value: Scalar) -> "Polynomial":
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "Polynomial":
        variables = tuple(variables)
        if name not in variables:
            raise ValueError(f"unknown variable '{name}'")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: 1})

    @classmethod
    def monomial(
        cls, variables: Sequence[str], exps: Sequence[int], coeff: Scalar = 1
    ) -> "Polynomial":
        return cls(variables, {tuple(exps): coeff})

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.variables != self.variables:
                raise ValueError(
                    f"ring mismatch: {self.variables} vs {other.variables}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.variables, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        result = dict(self.terms)
        for exps, c in other.terms.items():
            total = result.get(exps, 0) + c
            if total:
                result[exps] = total
            else:
                result.pop(exps, None)
        return Polynomial(self.variables, result)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        result: Dict[Monomial, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                total = result.get(exps, 0) + c1 * c2
                if total:
                    result[exps] = total
                else:
                    result.pop(exps, None)
        return Polynomial(self.variables, result)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "Polynomial":
        if power < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(self.variables, 1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.variables, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, name: str) -> int:
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def scale(self, factor: Scalar) -> "Polynomial":
        factor = to_fraction(factor)
        return Polynomial(self.variables, {e: c * factor for e, c in self.terms.items()})

    def diff(self, name: str) -> "Polynomial":
        """Partial derivative with respect to the variable `name`."""
        i = self.variables.index(name)
        result = {}
        for exps, c in self.terms.items():
            if exps[i]:
                lowered = exps[:i] + (exps[i] - 1,) + exps[i + 1 :]
                result[lowered] = c * exps[i]
        return Polynomial(self.variables, result)

    def substitute(self, name: str, value: "Polynomial") -> "Polynomial":
        """Replace the variable `name` by the polynomial `value` (same ring)."""
        value = self._coerce(value)
        i = self.variables.index(name)
        powers = {0: Polynomial.constant(self.variables, 1)}
        result = Polynomial(self.variables)
        for exps, c in self.terms.items():
            k = exps[i]
            if k not in powers:
                powers[k] = value**k
            rest = exps[:i] + (0,) + exps[i + 1 :]
            result = result + Polynomial(self.variables, {rest: c}) * powers[k]
        return result

    def extend(self, variables: Sequence[str]) -> "Polynomial":
        """Embed into a ring whose variable list contains ours."""
        variables = tuple(variables)
        missing = [v for v in self.variables if v not in variables]
        if missing:
            raise ValueError(f"cannot embed: variables {missing} are not in {variables}")
        index = [variables.index(v) for v in self.variables]
        result = {}
        for exps, c in self.terms.items():
            target = [0] * len(variables)
            for j, e in zip(index, exps):
                target[j] = e
            result[tuple(target)] = c
        return Polynomial(variables, result)

    def restrict(self, variables: Sequence[str]) -> "Polynomial":
        """Inverse of `extend`: drop variables that do not occur."""
        variables = tuple(variables)
        index = [self.variables.index(v) for v in variables]
        result = {}
        for exps, c in self.terms.items():
            if sum(exps) != sum(exps[j] for j in index):
                raise ValueError(f"polynomial {self} uses variables outside {variables}")
            result[tuple(exps[j] for j in index)] = c
        return Polynomial(variables, result)

    def exact_quotient(self, other: "Polynomial") -> Optional["Polynomial"]:
        """The polynomial q with self = q * other, or None when other does not divide self."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        q, r = self.to_sympy().div(other.to_sympy())
        if not r.is_zero:
            return None
        return Polynomial.from_sympy(q, self.variables)

    def to_sympy(self) -> sympy.Poly:
        gens = sympy.symbols(self.variables)
        data = {e: sympy.Rational(c.numerator, c.denominator) for e, c in self.terms.items()}
        if not data:
            data = {(0,) * len(self.variables): sympy.Integer(0)}
        return sympy.Poly.from_dict(data, *gens, domain=sympy.QQ)

    @classmethod
    def from_sympy(cls, poly, variables: Sequence[str]) -> "Polynomial":
        variables = tuple(variables)
        gens = sympy.symbols(variables)
        if not isinstance(poly, sympy.Poly):
            poly = sympy.Poly(poly, *gens, domain=sympy.QQ)
        elif tuple(str(g) for g in poly.gens) != variables:
            poly = sympy.Poly(poly.as_expr(), *gens, domain=sympy.QQ)
        return cls(variables, {e: to_fraction(c) for e, c in poly.as_dict().items()})

    def __str__(self) -> str:
        return format_terms(self.variables, self.terms)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, variables={self.variables})"


def format_monomial(names: Sequence[str], exps: Monomial) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_terms(names: Sequence[str], terms: Mapping[Monomial, Fraction]) -> str:
    """Render terms in descending graded order, e.g. `x^2 - 1/2*x*y + 3`."""
    if not terms:
        return "0"
    out = []
    for exps in sorted(terms, key=grevlex_key, reverse=True):
        c = terms[exps]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        mono = format_monomial(names, exps)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        out.append((sign, body))
    first_sign, first_body = out[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """Exact `add`, `sub` or `mul` of two polynomials over the same ring."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation '{op}'")


def monomials_up_to(count: int, degree: int) -> List[Monomial]:
    """All exponent vectors of length `count` and total degree <= `degree`, by degree then lex."""
    found: List[Monomial] = []
    for total in range(degree + 1):
        for bars in itertools.combinations(range(total + count - 1), count - 1):
            edges = (-1,) + bars + (total + count - 1,)
            found.append(tuple(edges[i + 1] - edges[i] - 1 for i in range(count)))
    found.sort(key=lambda e: (sum(e), tuple(-x for x in e)))
    return found
