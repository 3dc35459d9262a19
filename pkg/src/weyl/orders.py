from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

from src.exactmath.polynomial import Monomial, grevlex_key, to_fraction
from src.weyl.ring import WeylRing

KINDS = ("grevlex", "lex", "weight", "elimination")


@dataclass(frozen=True)
class OrderSpec:
    """
    A term order on normally ordered monomials.

    Attributes:
        kind: One of grevlex, lex, weight (weight vector then grevlex) or
            elimination (total degree in `kill` then grevlex)
        weights: Generator name to weight, for the weight kind; missing names weigh 0
        kill: Generators to eliminate, for the elimination kind
        position: Optional parameter read as a module position; terms are compared
            by its exponent first and only terms with equal exponent interact
    """

    kind: str = "grevlex"
    weights: Tuple[Tuple[str, Fraction], ...] = field(default=())
    kill: Tuple[str, ...] = ()
    position: Optional[str] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown order kind '{self.kind}', expected one of {KINDS}")
        weights = self.weights
        if isinstance(weights, dict):
            weights = tuple(weights.items())
        object.__setattr__(
            self, "weights", tuple(sorted((name, to_fraction(w)) for name, w in weights))
        )
        object.__setattr__(self, "kill", tuple(sorted(self.kill)))

    @classmethod
    def weight(cls, weights: Dict[str, Fraction], position: Optional[str] = None) -> "OrderSpec":
        return cls("weight", tuple(weights.items()), position=position)

    @classmethod
    def elimination(cls, kill, position: Optional[str] = None) -> "OrderSpec":
        return cls("elimination", kill=tuple(kill), position=position)

    def weight_vector(self, ring: WeylRing) -> Tuple[Fraction, ...]:
        table = dict(self.weights)
        for name in table:
            ring.index(name)
        if self.kind == "elimination":
            table = {name: Fraction(1) for name in self.kill}
        return tuple(table.get(name, Fraction(0)) for name in ring.names)

    def is_well_order(self, ring: WeylRing) -> bool:
        return all(w >= 0 for w in self.weight_vector(ring))


def check_admissible(ring: WeylRing, order: OrderSpec) -> None:
    """
    Reject orders that are incompatible with the Weyl relations.

    Raises:
        ValueError: If weight(x_i) + weight(d_i) < 0 for some i, or the
            position name is not a parameter
    """
    w = order.weight_vector(ring)
    for i, (x, d) in enumerate(zip(ring.x_vars, ring.d_vars)):
        if w[i] + w[ring.n + i] < 0:
            raise ValueError(
                f"inadmissible order: weight({x}) + weight({d}) = {w[i] + w[ring.n + i]} < 0"
            )
    if order.position is not None and order.position not in ring.params:
        raise ValueError(f"position '{order.position}' is not a parameter of {ring.names}")


def order_key(ring: WeylRing, order: OrderSpec, homogenized: bool = False) -> Callable[[Monomial], tuple]:
    """
    Sort key realizing `order` on exponent vectors of `ring`.

    With `homogenized` the total degree is compared before the weights,
    which turns a mixed-sign weight order into a well-order on the
    homogenized algebra.
    """
    pos = ring.index(order.position) if order.position is not None else None
    if order.kind == "lex":
        base = lambda e: tuple(e)
    elif order.kind == "grevlex":
        base = grevlex_key
    else:
        w = order.weight_vector(ring)
        if homogenized:
            base = lambda e: (sum(e), sum(a * b for a, b in zip(w, e) if a), grevlex_key(e))
        else:
            base = lambda e: (sum(a * b for a, b in zip(w, e) if a), grevlex_key(e))
    if pos is None:
        return base
    return lambda e: (e[pos], base(e))


def divides(m: Monomial, target: Monomial, pos: Optional[int] = None) -> bool:
    if pos is not None and m[pos] != target[pos]:
        return False
    return all(a <= b for a, b in zip(m, target))
