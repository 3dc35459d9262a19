import itertools
import logging
from fractions import Fraction
from math import floor
from typing import List, Sequence, Tuple

from src.exactmath.polynomial import Monomial, monomials_up_to
from src.newton.ideal import JumpEntry, MonomialIdeal, MultiplierTable, minimal_monomials
from src.newton.polyhedron import (
    DEFAULT_DIMENSION_CAP,
    NewtonPolyhedron,
    newton_polyhedron,
    polyhedron_of_points,
)

logger = logging.getLogger(__name__)


def _check_alpha(alpha: Fraction) -> None:
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")


def in_multiplier_ideal(poly: NewtonPolyhedron, v: Monomial, alpha: Fraction) -> bool:
    """x^v in J(alpha * a) iff v + 1 lies in the interior of alpha * P(a)."""
    return poly.in_scaled_interior([e + 1 for e in v], alpha)


def multiplier_ideal_monomial(
    a: MonomialIdeal, alpha: Fraction, degree_bound: int, dimension_cap: int = DEFAULT_DIMENSION_CAP
) -> List[Monomial]:
    """
    All monomials of degree <= degree_bound in J(alpha * a).

    Returns:
        List[Monomial]: Members sorted by degree, then lex
    """
    _check_alpha(alpha)
    poly = newton_polyhedron(a, dimension_cap)
    return [v for v in monomials_up_to(a.n, degree_bound) if in_multiplier_ideal(poly, v, alpha)]


def multiplier_ideal_generators(poly: NewtonPolyhedron, alpha: Fraction) -> Tuple[Monomial, ...]:
    """
    Minimal generators of J(alpha * a), without truncation.

    A minimal generator v has v_i <= alpha * offset / normal_i + 1 for some
    bounded facet with normal_i > 0, which bounds the search box.
    """
    box = []
    for i in range(poly.n):
        limits = [alpha * f.offset / f.normal[i] for f in poly.bounded_facets if f.normal[i] > 0]
        box.append(floor(max(limits)) + 1 if limits else 0)
    members = [
        v for v in itertools.product(*(range(b + 1) for b in box)) if in_multiplier_ideal(poly, v, alpha)
    ]
    return minimal_monomials(members)


def jumping_numbers_monomial(
    a: MonomialIdeal,
    alpha_max: Fraction,
    degree_bound: int,
    dimension_cap: int = DEFAULT_DIMENSION_CAP,
) -> MultiplierTable:
    """
    Jumping numbers of a monomial ideal in (0, alpha_max].

    Candidates are the thresholds of all monomials within the degree bound;
    each entry stores the minimal generators of J(alpha) after the jump.
    """
    _check_alpha(alpha_max)
    poly = newton_polyhedron(a, dimension_cap)
    candidates = set()
    for v in monomials_up_to(a.n, degree_bound):
        value = poly.threshold(v)
        if value is not None and value <= alpha_max:
            candidates.add(value)
    entries = []
    previous = None
    for alpha in sorted(candidates):
        generators = multiplier_ideal_generators(poly, alpha)
        if generators != previous:
            entries.append(JumpEntry(alpha, generators, complete=True))
            previous = generators
    return MultiplierTable(tuple(entries), a.n, degree_bound)


def lct_monomial(a: MonomialIdeal, dimension_cap: int = DEFAULT_DIMENSION_CAP) -> Fraction:
    """
    Log canonical threshold min over bounded facets of <normal, 1> / offset.

    Raises:
        ValueError: If the ideal is the unit ideal
    """
    poly = newton_polyhedron(a, dimension_cap)
    value = poly.threshold((0,) * a.n)
    if value is None:
        raise ValueError("the unit ideal has no log canonical threshold")
    return value


def mixed_multiplier_ideal(
    parts: Sequence[Tuple[MonomialIdeal, Fraction]],
    degree_bound: int,
    dimension_cap: int = DEFAULT_DIMENSION_CAP,
) -> List[Monomial]:
    """
    Monomials of degree <= degree_bound in J(c_1 * a_1 + ... + c_k * a_k).

    v + 1 must lie in the interior of the Minkowski sum of the c_i * P(a_i);
    its facet normals are those of the product ideal and its support
    function is sum_i c_i * h_i.

    Raises:
        ValueError: If no part is given, a coefficient is negative, or the
            dimensions differ
    """
    if not parts:
        raise ValueError("mixed_multiplier_ideal needs at least one ideal")
    n = parts[0][0].n
    for ideal, c in parts:
        if ideal.n != n:
            raise ValueError(f"dimension mismatch: {ideal.n} vs {n}")
        if c < 0:
            raise ValueError(f"coefficients must be non-negative, got {c}")
    points = [tuple(map(sum, zip(*choice))) for choice in itertools.product(*(i.generators for i, _ in parts))]
    product = polyhedron_of_points(points, n, dimension_cap)
    pieces = [newton_polyhedron(i, dimension_cap) for i, _ in parts]
    normals = {f.normal for f in product.facets}
    normals.update(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
    bounds = [(normal, sum((c * p.support(normal) for p, (_, c) in zip(pieces, parts)), Fraction(0))) for normal in sorted(normals)]
    members = []
    for v in monomials_up_to(n, degree_bound):
        u = [e + 1 for e in v]
        if all(sum(a * b for a, b in zip(normal, u)) > bound for normal, bound in bounds):
            members.append(v)
    return members
