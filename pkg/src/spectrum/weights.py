import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

import sympy

from src.exactmath.polynomial import Monomial, Polynomial, to_fraction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightSystem:
    """Positive weights w_i making f weighted homogeneous of degree 1."""

    variables: Tuple[str, ...]
    weights: Tuple[Fraction, ...]

    def degree(self, exps: Monomial) -> Fraction:
        return sum((w * e for w, e in zip(self.weights, exps)), Fraction(0))

    def euler_defect(self, f: Polynomial) -> Polynomial:
        """sum_i w_i x_i df/dx_i - f, zero exactly when f has weighted degree 1."""
        total = -f
        for name, w in zip(self.variables, self.weights):
            total = total + Polynomial.variable(f.variables, name) * f.diff(name) * w
        return total

    def as_dict(self) -> dict:
        return {name: str(w) for name, w in zip(self.variables, self.weights)}


def infer_weights(f: Polynomial) -> WeightSystem:
    """
    Solve <w, a> = 1 over the support of f for a positive weight vector.

    Raises:
        ValueError: If the system is inconsistent, underdetermined, or its
            solution has a non-positive entry
    """
    if f.is_zero():
        raise ValueError("no positive weight system: f is zero")
    support: Sequence[Monomial] = sorted(f.terms)
    n = len(f.variables)
    matrix = sympy.Matrix([[e for e in exps] for exps in support])
    rhs = sympy.Matrix([1] * len(support))
    try:
        solution, free = matrix.gauss_jordan_solve(rhs)
    except ValueError:
        raise ValueError(f"no positive weight system for {f}: the support is inconsistent") from None
    if free.shape[0] > 0:
        raise ValueError(
            f"no positive weight system for {f}: the support leaves {free.shape[0]} weight(s) undetermined"
        )
    weights = tuple(to_fraction(solution[i]) for i in range(n))
    if any(w <= 0 for w in weights):
        raise ValueError(f"no positive weight system for {f}: solution {tuple(map(str, weights))}")
    system = WeightSystem(f.variables, weights)
    if not system.euler_defect(f).is_zero():
        raise RuntimeError(f"weight system {system.as_dict()} fails the Euler identity for {f}")
    logger.debug(f"weights of {f}: {system.as_dict()}")
    return system
