from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from src.exactmath.polynomial import Monomial, Polynomial, format_monomial


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(u <= v for u, v in zip(a, b))


def minimal_monomials(monomials: Sequence[Monomial]) -> Tuple[Monomial, ...]:
    """Minimal elements under divisibility, sorted by degree then lex."""
    ordered = sorted(set(monomials), key=lambda e: (sum(e), tuple(e)))
    kept: List[Monomial] = []
    for m in ordered:
        if not any(_divides(k, m) for k in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """An ideal generated by monomials, stored by its minimal generators."""

    generators: Tuple[Monomial, ...]
    n: int

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.n:
                raise ValueError(f"monomial {g} does not have {self.n} exponents")
            if any(e < 0 for e in g):
                raise ValueError(f"monomial {g} has a negative exponent")
        object.__setattr__(self, "generators", minimal_monomials(tuple(map(tuple, self.generators))))

    @classmethod
    def from_polynomials(cls, polys: Sequence[Polynomial]) -> "MonomialIdeal":
        """
        Raises:
            ValueError: If a generator is not a single monomial
        """
        if not polys:
            raise ValueError("a monomial ideal needs at least one generator")
        n = len(polys[0].variables)
        gens = []
        for p in polys:
            if not p.is_monomial():
                raise ValueError(f"generator {p} is not a monomial")
            gens.append(next(iter(p.terms)))
        return cls(tuple(gens), n)

    def contains(self, exps: Monomial) -> bool:
        return any(_divides(g, exps) for g in self.generators)

    def is_unit(self) -> bool:
        return any(not any(g) for g in self.generators)

    def format(self, variables: Sequence[str]) -> str:
        return "(" + ", ".join(format_monomial(variables, g) or "1" for g in self.generators) + ")"


@dataclass(frozen=True)
class JumpEntry:
    """
    The ideal just after a jump, J(alpha), within the degree bound.

    `complete` is set when the generators describe the whole ideal rather
    than its members up to the bound.
    """

    alpha: Fraction
    generators: Tuple[Monomial, ...]
    complete: bool = False


@dataclass(frozen=True)
class MultiplierTable:
    """Jump points in increasing order with the ideals J(alpha) after each jump."""

    entries: Tuple[JumpEntry, ...]
    n: int
    degree_bound: int

    def __post_init__(self):
        alphas = [e.alpha for e in self.entries]
        if any(a >= b for a, b in zip(alphas, alphas[1:])):
            raise ValueError(f"jump points must increase strictly: {alphas}")

    @property
    def alphas(self) -> Tuple[Fraction, ...]:
        return tuple(e.alpha for e in self.entries)

    def ideal_at(self, alpha: Fraction) -> Optional[Tuple[Monomial, ...]]:
        """Generators of J(alpha) for any alpha, None before the first jump (whole ring)."""
        current = None
        for entry in self.entries:
            if entry.alpha <= alpha:
                current = entry.generators
        return current

    def to_rows(self, variables: Sequence[str]) -> List[Dict[str, object]]:
        rows = []
        for entry in self.entries:
            rows.append(
                {
                    "alpha": str(entry.alpha),
                    "ideal": [format_monomial(variables, g) or "1" for g in entry.generators],
                    "complete": entry.complete,
                }
            )
        return rows
