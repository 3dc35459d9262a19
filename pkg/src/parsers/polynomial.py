import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence

from src.exactmath.polynomial import Polynomial
from src.parsers.base import Parser
from src.weyl.ring import WeylElement, WeylRing

_TOKEN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


class ParseError(ValueError):
    """A syntax error with the 1-based column where it was detected."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} at column {column}")
        self.column = column


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int


def tokenize(data: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(data):
        if data[pos:].strip() == "":
            break
        m = _TOKEN.match(data, pos)
        if not m or m.end() == pos:
            column = pos + 1 + (len(data[pos:]) - len(data[pos:].lstrip()))
            raise ParseError(f"unexpected character {data[column - 1]!r}", column)
        kind = m.lastgroup
        text = m.group(kind)
        tokens.append(Token(kind, text, m.start(kind) + 1))
        pos = m.end()
    tokens.append(Token("end", "", len(data) + 1))
    return tokens


class _Expression:
    """
    Recursive descent over + - * / ^ and parentheses.

    Juxtaposed parenthesised groups such as (a)(b) multiply; any other
    implicit multiplication is rejected. A divisor must be a nonzero constant.
    """

    def __init__(self, tokens: List[Token], lookup: Callable[[Token], Any], constant: Callable[[Fraction], Any]):
        self.tokens = tokens
        self.index = 0
        self.lookup = lookup
        self.constant = constant

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _is(self, text: str) -> bool:
        return self.current.kind == "op" and self.current.text == text

    def parse(self):
        if self.current.kind == "end":
            raise ParseError("empty expression", self.current.column)
        value = self.expression()
        if self.current.kind != "end":
            token = self.current
            if token.kind in ("number", "ident") or self._is("("):
                raise ParseError(f"implicit multiplication before {token.text!r}", token.column)
            raise ParseError(f"unexpected {token.text!r}", token.column)
        return value

    def expression(self):
        value = self.term()
        while self._is("+") or self._is("-"):
            op = self._advance().text
            right = self.term()
            value = value + right if op == "+" else value - right
        return value

    def term(self):
        grouped = self._is("(")
        value = self.unary()
        while True:
            if self._is("*"):
                self._advance()
                grouped = self._is("(")
                value = value * self.unary()
            elif self._is("/"):
                slash = self._advance()
                divisor = _constant_value(self.unary())
                if divisor is None:
                    raise ParseError("division by a non-constant", slash.column)
                if divisor == 0:
                    raise ParseError("division by zero", slash.column)
                value = value * self.constant(1 / divisor)
                grouped = False
            elif self._is("(") and grouped:
                value = value * self.power()
            else:
                return value

    def unary(self):
        if self._is("-"):
            self._advance()
            return -self.unary()
        if self._is("+"):
            self._advance()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self._is("^"):
            self._advance()
            token = self.current
            if token.kind != "number":
                raise ParseError("exponent must be a non-negative integer", token.column)
            self._advance()
            base = base ** int(token.text)
        return base

    def atom(self):
        token = self.current
        if token.kind == "number":
            self._advance()
            return self.constant(Fraction(int(token.text)))
        if token.kind == "ident":
            self._advance()
            return self.lookup(token)
        if self._is("("):
            self._advance()
            value = self.expression()
            if not self._is(")"):
                raise ParseError("expected ')'", self.current.column)
            self._advance()
            return value
        if token.kind == "end":
            raise ParseError("unexpected end of input", token.column)
        raise ParseError(f"unexpected {token.text!r}", token.column)


def _constant_value(value) -> Optional[Fraction]:
    if not value.is_constant():
        return None
    if isinstance(value, Polynomial):
        return value.constant_value()
    return value.terms.get((0,) * value.ring.size, Fraction(0))


class PolynomialParser(Parser):
    """
    Parses polynomials with rational coefficients over declared variables.

    Config options:
        - variables: Ordered list of variable names (required)
    """

    def _validate_config(self) -> None:
        self.config.setdefault("variables", [])
        variables = self.config["variables"]
        if not variables:
            raise ValueError("PolynomialParser needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variables in {variables}")
        for name in variables:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise ValueError(f"invalid variable name '{name}'")
        self.variables = tuple(variables)

    def _lookup(self, token: Token) -> Polynomial:
        if token.text not in self.variables:
            raise ParseError(f"unknown identifier {token.text!r}", token.column)
        return Polynomial.variable(self.variables, token.text)

    def parse(self, data: str) -> Polynomial:
        """
        Parse a polynomial.

        Raises:
            ParseError: On a syntax error or an unknown identifier
        """
        constant = lambda c: Polynomial.constant(self.variables, c)
        return _Expression(tokenize(data), self._lookup, constant).parse()

    def get_metadata(self) -> Dict[str, Any]:
        return {"parser_type": "polynomial", "variables": list(self.variables)}


class OperatorParser(Parser):
    """
    Parses Weyl algebra elements; `dx` denotes the derivation of `x`.

    Products are taken in the noncommutative algebra, so `dx*x` is x*dx + 1.

    Config options:
        - variables: Ordered list of x variable names (required)
        - params: Parameter names such as s, s1, s12 (default: ["s"])
    """

    def _validate_config(self) -> None:
        self.config.setdefault("variables", [])
        self.config.setdefault("params", ["s"])
        if not self.config["variables"]:
            raise ValueError("OperatorParser needs at least one variable")
        self.ring = WeylRing(tuple(self.config["variables"]), params=tuple(self.config["params"]))

    def _lookup(self, token: Token) -> WeylElement:
        if token.text not in self.ring.names:
            raise ParseError(f"unknown identifier {token.text!r}", token.column)
        return self.ring.gen(token.text)

    def parse(self, data: str) -> WeylElement:
        """
        Parse an operator.

        Raises:
            ParseError: On a syntax error or an unknown identifier
        """
        return _Expression(tokenize(data), self._lookup, self.ring.constant).parse()

    def get_metadata(self) -> Dict[str, Any]:
        return {
            "parser_type": "operator",
            "variables": list(self.ring.x_vars),
            "derivations": list(self.ring.d_vars),
            "params": list(self.ring.params),
        }


def parse_polynomial(src: str, variables: Sequence[str]) -> Polynomial:
    """Parse `src` as a polynomial in `variables`."""
    return PolynomialParser({"variables": list(variables)}).parse(src)
