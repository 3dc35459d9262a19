import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from src.exactmath.linalg import solve_linear
from src.exactmath.polynomial import Monomial, Polynomial
from src.exactmath.univariate import UnivariatePoly, format_factored, rational_roots
from src.bfun.annihilator import ann_fs, s_ring
from src.weyl.groebner import eliminate, left_groebner, normal_form
from src.weyl.orders import OrderSpec
from src.weyl.ring import WeylElement

logger = logging.getLogger(__name__)

METHODS = ("linear", "elimination")
POSITION = "_e"


@dataclass(frozen=True)
class BFunction:
    """
    The monic polynomial b_{f,h}(s) with its rational roots.

    Attributes:
        poly: Monic univariate polynomial in s
        roots: (root, multiplicity) pairs, largest root first
        f: The function
        h: The numerator
    """

    poly: UnivariatePoly
    roots: Tuple[Tuple[Fraction, int], ...]
    f: Polynomial
    h: Polynomial

    @property
    def largest_root(self) -> Optional[Fraction]:
        return self.roots[0][0] if self.roots else None

    def b_z(self) -> UnivariatePoly:
        """The shifted polynomial b_f(s - 1) reported for the hypersurface."""
        return self.poly.shift(-1)

    def factored(self) -> str:
        return format_factored(self.roots, self.poly.var)

    def __str__(self) -> str:
        return self.factored()


def _monic_bfunction(b: UnivariatePoly, f: Polynomial, h: Polynomial) -> BFunction:
    b = b.monic()
    report = rational_roots(b)
    if not report.splits:
        raise RuntimeError(f"b-function {b} of {f} has the non-rational factor {report.cofactor}")
    for root, _ in report.roots:
        if root >= 0:
            raise RuntimeError(f"b-function {b} of {f} has the non-negative root {root}")
    return BFunction(b, report.roots, f, h)


def _linear_dependency(
    h: WeylElement, gb: Sequence[WeylElement], max_degree: int
) -> Optional[UnivariatePoly]:
    """Least d with s^d h + sum_k c_k s^k h reducing to zero modulo `gb`."""
    ring = h.ring
    s = ring.gen("s")
    forms: List[WeylElement] = []
    current = normal_form(h, gb)
    for d in range(max_degree + 1):
        if d > 0:
            current = normal_form(s * current, gb)
        if current.is_zero():
            coefficients = [Fraction(0)] * d + [Fraction(1)]
            return UnivariatePoly(tuple(coefficients))
        monomials: List[Monomial] = sorted({e for p in forms + [current] for e in p.terms})
        index = {m: i for i, m in enumerate(monomials)}
        rows: List[Dict[int, Fraction]] = [dict() for _ in monomials]
        for k, p in enumerate(forms):
            for e, c in p.terms.items():
                rows[index[e]][k] = c
        rhs = [-current.terms.get(m, Fraction(0)) for m in monomials]
        if forms:
            solution = solve_linear(rows, rhs, len(forms))
            if solution is not None:
                return UnivariatePoly(tuple(solution) + (Fraction(1),))
        forms.append(current)
    return None


def _by_elimination(
    ann: Sequence[WeylElement], F: WeylElement, H: WeylElement, verbose: bool
) -> Optional[UnivariatePoly]:
    ring = F.ring
    kill = ring.x_vars + ring.d_vars
    if H == ring.one():
        candidates = eliminate(list(ann) + [F], kill, verbose=verbose)
    else:
        mring = ring.with_params([POSITION])
        e = mring.gen(POSITION)
        gens = [g.to_ring(mring) * e for g in list(ann) + [F * H]]
        gens.append(H.to_ring(mring) * e + 1)
        basis = eliminate(gens, kill, position=POSITION, verbose=verbose)
        candidates = [g.to_ring(ring) for g in basis if not g.involves([POSITION])]
    univariate = [g for g in candidates if not g.is_zero()]
    if not univariate:
        return None
    best = min(univariate, key=lambda g: max(sum(exps) for exps in g.terms))
    return UnivariatePoly.from_polynomial(best.to_polynomial().restrict(("s",)))


def relation_basis(
    f: Polynomial, ann: Sequence[WeylElement], h: Optional[Polynomial] = None, verbose: bool = False
) -> List[WeylElement]:
    """Left Gröbner basis of Ann f^s + D[s] f h under grevlex."""
    ring = s_ring(f)
    F = ring.from_polynomial(f)
    if h is not None:
        F = F * ring.from_polynomial(h)
    return left_groebner(list(ann) + [F], OrderSpec(), verbose)


def bernstein_sato(
    f: Polynomial,
    h: Optional[Polynomial] = None,
    method: str = "linear",
    ann: Optional[Sequence[WeylElement]] = None,
    ann_method: str = "auto",
    max_degree: int = 40,
    verbose: bool = False,
) -> BFunction:
    """
    The Bernstein-Sato polynomial b_{f,h}(s).

    It is the monic generator of the b in Q[s] with b(s) h in
    Ann f^s + D[s] f h.

    Args:
        f: A nonconstant polynomial
        h: Numerator, defaults to 1
        method: `linear` searches for the least linear dependency among normal
            forms of s^k h; `elimination` eliminates all x and d, with a
            rank-2 module position when h is not 1
        ann: Precomputed generators of Ann f^s
        ann_method: Passed to ann_fs when `ann` is not given
        max_degree: Largest degree tried by the linear method
        verbose: Log Gröbner statistics at INFO

    Returns:
        BFunction: The monic polynomial and its roots

    Raises:
        ValueError: If f is constant, h is zero, or the rings differ
        RuntimeError: If no univariate element is found or the roots are not
            negative rationals
    """
    if f.is_constant():
        raise ValueError(f"bernstein_sato needs a nonconstant polynomial, got {f}")
    if h is None:
        h = Polynomial.constant(f.variables, 1)
    if h.variables != f.variables:
        raise ValueError(f"ring mismatch: {h.variables} vs {f.variables}")
    if h.is_zero():
        raise ValueError("the numerator h must be nonzero")
    if method not in METHODS:
        raise ValueError(f"unknown b-function method '{method}', expected one of {METHODS}")
    if ann is None:
        ann = ann_fs(f, ann_method, verbose)
    ring = s_ring(f)
    F = ring.from_polynomial(f)
    H = ring.from_polynomial(h)
    if method == "linear":
        gb = relation_basis(f, ann, h, verbose)
        b = _linear_dependency(H, gb, max_degree)
    else:
        b = _by_elimination(ann, F, H, verbose)
    if b is None:
        raise RuntimeError(f"no univariate element found for f = {f}, h = {h}")
    result = _monic_bfunction(b, f, h)
    logger.log(logging.INFO if verbose else logging.DEBUG, f"b_(f,h) for f = {f}, h = {h}: {result}")
    return result


def jump_value(f: Polynomial, h: Optional[Polynomial] = None, **kwargs) -> Optional[Fraction]:
    """alpha_h = -(largest root of b_{f,h}); None when b_{f,h} = 1."""
    b = bernstein_sato(f, h, **kwargs)
    return None if b.largest_root is None else -b.largest_root


def lct_from_bfunction(f: Polynomial, **kwargs) -> Fraction:
    """
    Log canonical threshold as minus the largest root of b_f.

    Raises:
        ValueError: If b_f has no roots, i.e. f vanishes nowhere
    """
    value = jump_value(f, None, **kwargs)
    if value is None:
        raise ValueError(f"{f} vanishes nowhere, its log canonical threshold is undefined")
    return value


def multiplier_membership(f: Polynomial, h: Polynomial, alpha: Fraction, **kwargs) -> bool:
    """
    Whether h lies in the multiplier ideal J(alpha * Z) of Z = {f = 0}.

    True iff alpha < c for every root -c of b_{f,h}.

    Raises:
        ValueError: If alpha is not positive
    """
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    value = jump_value(f, h, **kwargs)
    return value is None or alpha < value
