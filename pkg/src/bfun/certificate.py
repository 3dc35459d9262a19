import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from src.exactmath.linalg import solve_linear
from src.exactmath.polynomial import Monomial, Polynomial, monomials_up_to
from src.exactmath.univariate import UnivariatePoly
from src.bfun.annihilator import s_ring
from src.weyl.action import FsElement, FsModule
from src.weyl.ring import WeylElement

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Certificate:
    """
    A functional equation b(s) h prod f_i^(s_i) = sum_j P_j f_j h prod f_i^(s_i).

    For several functions, `s` in b and in the operators stands for s1 + ... + sr.
    """

    f: Tuple[Polynomial, ...]
    h: Polynomial
    b: UnivariatePoly
    ops: Tuple[WeylElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(self.f))
        object.__setattr__(self, "ops", tuple(self.ops))
        if len(self.ops) != len(self.f):
            raise ValueError(f"expected {len(self.f)} operators, got {len(self.ops)}")


@dataclass(frozen=True)
class Verification:
    """Outcome of a certificate check; `residual` is the nonzero difference when invalid."""

    valid: bool
    residual: Optional[FsElement] = None
    residual_text: str = "0"


def _b_of_s(module: FsModule, b: UnivariatePoly) -> Polynomial:
    s = module.param_polynomial("s")
    total = Polynomial(module.variables)
    power = Polynomial.constant(module.variables, 1)
    for c in b.coefficients:
        total = total + power.scale(c)
        power = power * s
    return total


def verify_certificate(c: Certificate) -> Verification:
    """
    Compute b(s) h f^s - sum_j P_j (f_j h f^s) exactly.

    Returns:
        Verification: valid when the difference vanishes, otherwise the residual
    """
    module = FsModule(c.f)
    h = module.poly(c.h)
    lhs = module.element(_b_of_s(module, c.b) * h)
    rhs = FsElement(Polynomial(module.variables), (0,) * module.r)
    for fj, P in zip(module.f, c.ops):
        rhs = module.add(rhs, module.apply(P, module.element(fj * h)))
    residual = module.sub(lhs, rhs)
    if residual.is_zero():
        return Verification(True)
    return Verification(False, residual, module.describe(residual))


def find_certificate(
    f: Polynomial, b: UnivariatePoly, h: Optional[Polynomial] = None, max_degree: int = 6
) -> Certificate:
    """
    Find an operator P with P (f h f^s) = b(s) h f^s.

    The operator is an unknown combination of monomials x^a d^c s^k whose
    total degree grows until the exact linear system becomes solvable.

    Raises:
        RuntimeError: If no operator exists up to `max_degree` or the found
            operator fails verification
    """
    if h is None:
        h = Polynomial.constant(f.variables, 1)
    ring = s_ring(f)
    module = FsModule([f])
    n = ring.n
    start = module.element(module.f[0] * module.poly(h))
    target_base = _b_of_s(module, b) * module.poly(h)
    derivatives: Dict[Monomial, FsElement] = {(0,) * n: start}

    def derivative(beta: Monomial) -> FsElement:
        if beta not in derivatives:
            i = next(i for i, e in enumerate(beta) if e)
            lower = beta[:i] + (beta[i] - 1,) + beta[i + 1 :]
            derivatives[beta] = module.differentiate(derivative(lower), f.variables[i])
        return derivatives[beta]

    for degree in range(1, max_degree + 1):
        fpow = [module.f[0] ** k for k in range(degree + 1)]
        exponents = monomials_up_to(2 * n + 1, degree)
        columns: List[Polynomial] = []
        for exps in exponents:
            a, beta, k = exps[:n], exps[n : 2 * n], exps[2 * n]
            g = derivative(beta)
            shift = g.shifts[0]
            factor = Polynomial.monomial(module.variables, a + (k,))
            columns.append(g.numerator * factor * fpow[degree - shift])
        target = target_base * fpow[degree]
        monomials = sorted({e for p in columns + [target] for e in p.terms})
        index = {m: i for i, m in enumerate(monomials)}
        rows: List[Dict[int, Fraction]] = [dict() for _ in monomials]
        for j, p in enumerate(columns):
            for e, c in p.terms.items():
                rows[index[e]][j] = c
        rhs = [target.terms.get(m, Fraction(0)) for m in monomials]
        solution = solve_linear(rows, rhs, len(columns))
        logger.debug(f"certificate ansatz of degree {degree}: {len(columns)} unknowns, solvable={solution is not None}")
        if solution is None:
            continue
        P = WeylElement(ring, {exps: c for exps, c in zip(exponents, solution) if c})
        certificate = Certificate((f,), h, b, (P,))
        if not verify_certificate(certificate).valid:
            raise RuntimeError(f"certificate {P} for {f} failed verification")
        return certificate
    raise RuntimeError(f"no certificate of total degree <= {max_degree} for b = {b} and f = {f}")
