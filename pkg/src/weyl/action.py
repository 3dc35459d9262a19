import logging
import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.exactmath.polynomial import Polynomial
from src.weyl.ring import WeylElement

logger = logging.getLogger(__name__)

_SHIFT = re.compile(r"^s([1-9])([1-9])$")


def s_names(r: int) -> Tuple[str, ...]:
    """Parameter names for r functions: `s` for one, `s1..sr` otherwise."""
    if r < 1:
        raise ValueError("at least one function is required")
    if r == 1:
        return ("s",)
    if r > 9:
        raise ValueError("at most 9 functions are supported")
    return tuple(f"s{i}" for i in range(1, r + 1))


@dataclass(frozen=True)
class FsElement:
    """
    The element numerator * prod_i f_i^(s_i - shifts_i) of the module of f^s.

    The numerator is a polynomial in the x variables and the s parameters.
    """

    numerator: Polynomial
    shifts: Tuple[int, ...]

    def is_zero(self) -> bool:
        return self.numerator.is_zero()


class FsModule:
    """
    The module Q[x, 1/prod f_i, s_1..s_r] * prod f_i^(s_i) with its D[s] action.

    Args:
        f: The functions f_1..f_r, all over the same x variables
    """

    def __init__(self, f: Sequence[Polynomial]):
        if not f:
            raise ValueError("at least one function is required")
        self.x_vars = f[0].variables
        for fi in f:
            if fi.variables != self.x_vars:
                raise ValueError(f"ring mismatch: {fi.variables} vs {self.x_vars}")
            if fi.is_zero():
                raise ValueError("the functions f_i must be nonzero")
        self.r = len(f)
        self.s_vars = s_names(self.r)
        self.variables = self.x_vars + self.s_vars
        self.f = [fi.extend(self.variables) for fi in f]

    def poly(self, p: Polynomial) -> Polynomial:
        """Bring a polynomial in x and/or s into the numerator ring."""
        return p if p.variables == self.variables else p.extend(self.variables)

    def element(self, numerator: Polynomial, shifts: Sequence[int] = None) -> FsElement:
        shifts = tuple(shifts) if shifts is not None else (0,) * self.r
        if len(shifts) != self.r:
            raise ValueError(f"expected {self.r} shifts, got {len(shifts)}")
        return self._normalize(FsElement(self.poly(numerator), shifts))

    def power(self) -> FsElement:
        """The generator prod f_i^(s_i)."""
        return self.element(Polynomial.constant(self.variables, 1))

    def _normalize(self, g: FsElement) -> FsElement:
        n = g.numerator
        shifts = list(g.shifts)
        for i, k in enumerate(shifts):
            if k < 0:
                n = n * self.f[i] ** (-k)
                shifts[i] = 0
        if n.is_zero():
            shifts = [0] * self.r
        return FsElement(n, tuple(shifts))

    def reduced(self, g: FsElement) -> FsElement:
        """Divide the numerator by f_i while it stays divisible, lowering shift i each time."""
        n = g.numerator
        shifts = list(g.shifts)
        for i, fi in enumerate(self.f):
            while shifts[i] > 0 and not n.is_zero():
                q = n.exact_quotient(fi)
                if q is None:
                    break
                n = q
                shifts[i] -= 1
        return FsElement(n, tuple(shifts))

    def _lift(self, g: FsElement, shifts: Sequence[int]) -> Polynomial:
        n = g.numerator
        for i, (k, target) in enumerate(zip(g.shifts, shifts)):
            if target > k:
                n = n * self.f[i] ** (target - k)
        return n

    def add(self, a: FsElement, b: FsElement) -> FsElement:
        if a.is_zero():
            return b
        if b.is_zero():
            return a
        shifts = tuple(max(u, v) for u, v in zip(a.shifts, b.shifts))
        return self._normalize(FsElement(self._lift(a, shifts) + self._lift(b, shifts), shifts))

    def sub(self, a: FsElement, b: FsElement) -> FsElement:
        return self.add(a, FsElement(-b.numerator, b.shifts))

    def multiply(self, g: FsElement, p: Polynomial) -> FsElement:
        return FsElement(g.numerator * self.poly(p), g.shifts)

    def differentiate(self, g: FsElement, x: str) -> FsElement:
        """Apply d/dx: every shift grows by one."""
        if g.is_zero():
            return g
        product = Polynomial.constant(self.variables, 1)
        for fi in self.f:
            product = product * fi
        n = g.numerator
        result = n.diff(x) * product
        for i, fi in enumerate(self.f):
            dfi = fi.diff(x)
            if dfi.is_zero():
                continue
            exponent = Polynomial.variable(self.variables, self.s_vars[i]) - g.shifts[i]
            rest = Polynomial.constant(self.variables, 1)
            for l, fl in enumerate(self.f):
                if l != i:
                    rest = rest * fl
            result = result + n * exponent * dfi * rest
        return FsElement(result, tuple(k + 1 for k in g.shifts))

    def _substitute_s(self, g: FsElement, i: int, delta: int) -> Polynomial:
        name = self.s_vars[i]
        return g.numerator.substitute(name, Polynomial.variable(self.variables, name) + delta)

    def t(self, g: FsElement, i: int) -> FsElement:
        """t_i: s_i -> s_i + 1 and multiplication by f_i."""
        shifts = list(g.shifts)
        shifts[i] -= 1
        return self._normalize(FsElement(self._substitute_s(g, i, 1), tuple(shifts)))

    def t_inverse(self, g: FsElement, i: int) -> FsElement:
        """t_i^-1: s_i -> s_i - 1 and division by f_i."""
        shifts = list(g.shifts)
        shifts[i] += 1
        return FsElement(self._substitute_s(g, i, -1), tuple(shifts))

    def shift_operator(self, g: FsElement, i: int, j: int) -> FsElement:
        """s_ij = s_i t_i^-1 t_j."""
        g = self.t_inverse(self.t(g, j), i)
        return self.multiply(g, Polynomial.variable(self.variables, self.s_vars[i]))

    def param_polynomial(self, name: str) -> Polynomial:
        if name in self.s_vars:
            return Polynomial.variable(self.variables, name)
        if name == "s":
            total = Polynomial(self.variables)
            for v in self.s_vars:
                total = total + Polynomial.variable(self.variables, v)
            return total
        raise ValueError(f"parameter '{name}' has no action on f^s")

    def apply(self, P: WeylElement, g: FsElement) -> FsElement:
        """
        Image of `g` under the operator `P`.

        In a term coeff * x^a * d^b * s^c * s_ij^e the shift operators act
        first, then the s parameters, then d^b, then x^a.

        Raises:
            ValueError: If P is over other x variables or uses an unknown parameter
        """
        ring = P.ring
        if ring.x_vars != self.x_vars:
            raise ValueError(f"ring mismatch: operator over {ring.x_vars}, functions over {self.x_vars}")
        shifts = {}
        for name in ring.params:
            m = _SHIFT.match(name)
            if m and self.r > 1:
                i, j = int(m.group(1)) - 1, int(m.group(2)) - 1
                if i >= self.r or j >= self.r or i == j:
                    raise ValueError(f"shift operator '{name}' does not fit {self.r} functions")
                shifts[name] = (i, j)
            else:
                self.param_polynomial(name)
        n = ring.n
        result = FsElement(Polynomial(self.variables), (0,) * self.r)
        for exps, coeff in P.terms.items():
            a, b, p = exps[:n], exps[n : 2 * n], exps[2 * n :]
            term = g
            for name, e in zip(ring.params, p):
                if name in shifts:
                    for _ in range(e):
                        term = self.shift_operator(term, *shifts[name])
            for name, e in zip(ring.params, p):
                if name not in shifts and e:
                    term = self.multiply(term, self.param_polynomial(name) ** e)
            for x, e in zip(self.x_vars, b):
                for _ in range(e):
                    term = self.differentiate(term, x)
            if any(a):
                term = self.multiply(term, Polynomial.monomial(self.x_vars, a).extend(self.variables))
            result = self.add(result, FsElement(term.numerator.scale(coeff), term.shifts))
        return result

    def equal(self, a: FsElement, b: FsElement) -> bool:
        return self.sub(a, b).is_zero()

    def describe(self, g: FsElement) -> str:
        """Human-readable form such as `(s) * f^(s-1)`, with common factors f_i cancelled."""
        if g.is_zero():
            return "0"
        g = self.reduced(g)
        parts = [f"({g.numerator})"]
        for i, k in enumerate(g.shifts):
            base = f"f{i + 1}" if self.r > 1 else "f"
            exponent = self.s_vars[i] if not k else f"{self.s_vars[i]}-{k}"
            parts.append(f"{base}^({exponent})")
        return " * ".join(parts)


def apply_to_fs(P: WeylElement, g: FsElement, f: Sequence[Polynomial]) -> FsElement:
    """Apply an operator to an element of the module of prod f_i^(s_i)."""
    return FsModule(f).apply(P, g)


def annihilates(P: WeylElement, f: Sequence[Polynomial]) -> bool:
    module = FsModule(f)
    return module.apply(P, module.power()).is_zero()

