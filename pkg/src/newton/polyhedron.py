import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import List, Optional, Sequence, Tuple

import sympy

from src.exactmath.polynomial import Monomial, to_fraction
from src.newton.ideal import MonomialIdeal

logger = logging.getLogger(__name__)

DEFAULT_DIMENSION_CAP = 6


@dataclass(frozen=True)
class Facet:
    """The inequality <normal, u> >= offset with a primitive non-negative integer normal."""

    normal: Tuple[int, ...]
    offset: int

    def value(self, u: Sequence) -> Fraction:
        return sum((Fraction(a) * b for a, b in zip(self.normal, u)), Fraction(0))

    @property
    def is_coordinate(self) -> bool:
        return self.offset == 0

    def __str__(self) -> str:
        terms = []
        for i, a in enumerate(self.normal):
            if a:
                terms.append(f"u{i + 1}" if a == 1 else f"{a}*u{i + 1}")
        return f"{' + '.join(terms)} >= {self.offset}"


@dataclass(frozen=True)
class NewtonPolyhedron:
    """Facet description of conv(points) + the non-negative orthant."""

    facets: Tuple[Facet, ...]
    points: Tuple[Monomial, ...]
    n: int

    @property
    def bounded_facets(self) -> Tuple[Facet, ...]:
        """Facets with positive offset, i.e. not on a coordinate hyperplane."""
        return tuple(f for f in self.facets if f.offset > 0)

    def support(self, normal: Sequence[int]) -> int:
        """min over the generating points of <normal, p>."""
        return min(sum(a * b for a, b in zip(normal, p)) for p in self.points)

    def contains(self, u: Sequence) -> bool:
        return all(f.value(u) >= f.offset for f in self.facets)

    def in_scaled_interior(self, u: Sequence, alpha: Fraction) -> bool:
        """Whether u lies in the interior of alpha * P."""
        return all(f.value(u) > alpha * f.offset for f in self.facets)

    def threshold(self, v: Monomial) -> Optional[Fraction]:
        """
        min over bounded facets of <normal, v + 1> / offset.

        x^v lies in J(alpha) exactly for alpha below this value; None when
        P is the whole orthant.
        """
        shifted = [e + 1 for e in v]
        values = [f.value(shifted) / f.offset for f in self.bounded_facets]
        return min(values) if values else None


def _primitive(vector: Sequence[Fraction]) -> Tuple[int, ...]:
    fractions = [to_fraction(c) for c in vector]
    denominator = 1
    for c in fractions:
        denominator = lcm(denominator, c.denominator)
    ints = [int(c * denominator) for c in fractions]
    divisor = 0
    for c in ints:
        divisor = gcd(divisor, abs(c))
    return tuple(c // divisor for c in ints)


def _candidate_normal(points: Sequence[Monomial], directions: Sequence[int], n: int) -> Optional[Tuple[int, ...]]:
    rows = [[p[i] - points[0][i] for i in range(n)] for p in points[1:]]
    rows += [[1 if i == d else 0 for i in range(n)] for d in directions]
    if not rows:
        if n != 1:
            return None
        return (1,)
    kernel = sympy.Matrix(rows).nullspace()
    if len(kernel) != 1:
        return None
    normal = _primitive([kernel[0][i] for i in range(n)])
    if all(c <= 0 for c in normal):
        normal = tuple(-c for c in normal)
    if any(c < 0 for c in normal):
        return None
    return normal


def polyhedron_of_points(points: Sequence[Monomial], n: int, dimension_cap: int = DEFAULT_DIMENSION_CAP) -> NewtonPolyhedron:
    """
    Facets of conv(points) + R^n_{>=0} by exhaustive search.

    A bounded facet passes through k affinely independent points and
    contains n - k coordinate directions; every candidate hyperplane is
    kept when all points lie on its positive side.

    Raises:
        ValueError: If there are no points or n exceeds `dimension_cap`
    """
    if not points:
        raise ValueError("a Newton polyhedron needs at least one point")
    if n > dimension_cap:
        raise ValueError(f"dimension {n} exceeds the configured cap {dimension_cap}; raise dimension_cap")
    points = tuple(sorted(set(tuple(p) for p in points)))
    found = {}
    for k in range(1, n + 1):
        for subset in itertools.combinations(points, k):
            for directions in itertools.combinations(range(n), n - k):
                normal = _candidate_normal(subset, directions, n)
                if normal is None:
                    continue
                offset = sum(a * b for a, b in zip(normal, subset[0]))
                if offset <= 0:
                    continue
                if all(sum(a * b for a, b in zip(normal, p)) >= offset for p in points):
                    found[normal] = offset
    facets = [Facet(normal, offset) for normal, offset in found.items()]
    for i in range(n):
        if any(p[i] == 0 for p in points):
            facets.append(Facet(tuple(1 if j == i else 0 for j in range(n)), 0))
    facets.sort(key=lambda f: (f.offset == 0, f.normal))
    logger.debug(f"polyhedron of {len(points)} points in dimension {n}: {len(facets)} facets")
    return NewtonPolyhedron(tuple(facets), points, n)


def newton_polyhedron(a: MonomialIdeal, dimension_cap: int = DEFAULT_DIMENSION_CAP) -> NewtonPolyhedron:
    """Newton polyhedron of a monomial ideal from its minimal generators."""
    if not a.generators:
        raise ValueError("the zero ideal has no Newton polyhedron")
    return polyhedron_of_points(a.generators, a.n, dimension_cap)
