import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, perm
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union

from src.exactmath.polynomial import Monomial, Polynomial, format_terms, grevlex_key, to_fraction

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def _leibniz(b: int, c: int) -> Tuple[Tuple[int, int], ...]:
    """Coefficients of d^b x^c = sum_k C(b,k) c!/(c-k)! x^(c-k) d^(b-k)."""
    return tuple((k, comb(b, k) * perm(c, k)) for k in range(min(b, c) + 1))


@lru_cache(maxsize=200_000)
def _monomial_product(
    n: int, hidx: Optional[int], e1: Monomial, e2: Monomial
) -> Tuple[Tuple[Monomial, int], ...]:
    a1, b1, p1 = e1[:n], e1[n : 2 * n], e1[2 * n :]
    a2, b2, p2 = e2[:n], e2[n : 2 * n], e2[2 * n :]
    params = [u + v for u, v in zip(p1, p2)]
    result = []
    for choice in itertools.product(*(_leibniz(b1[i], a2[i]) for i in range(n))):
        coeff = 1
        xs, ds, lowered = [], [], 0
        for i, (k, c) in enumerate(choice):
            coeff *= c
            xs.append(a1[i] + a2[i] - k)
            ds.append(b1[i] + b2[i] - k)
            lowered += k
        p = list(params)
        if hidx is not None:
            p[hidx] += 2 * lowered
        result.append((tuple(xs + ds + p), coeff))
    return tuple(result)


@dataclass(frozen=True)
class WeylRing:
    """
    The Weyl algebra over the rationals in `x_vars` and their derivations.

    `params` are central commuting parameters such as s or s1..sr. When
    `homogenizer` names one of the parameters, the defining relation becomes
    d_i x_i = x_i d_i + h^2 instead of d_i x_i = x_i d_i + 1.

    Exponent vectors are laid out as (x_1..x_n, d_1..d_n, params...).
    """

    x_vars: Tuple[str, ...]
    d_vars: Tuple[str, ...] = ()
    params: Tuple[str, ...] = ()
    homogenizer: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "x_vars", tuple(self.x_vars))
        d_vars = tuple(self.d_vars) or tuple(f"d{x}" for x in self.x_vars)
        object.__setattr__(self, "d_vars", d_vars)
        object.__setattr__(self, "params", tuple(self.params))
        if len(self.x_vars) != len(self.d_vars):
            raise ValueError(
                f"x_vars {self.x_vars} and d_vars {self.d_vars} must have equal length"
            )
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate names in ring {self.names}")
        if self.homogenizer is not None and self.homogenizer not in self.params:
            raise ValueError(f"homogenizer '{self.homogenizer}' is not a parameter")

    @property
    def n(self) -> int:
        return len(self.x_vars)

    @property
    def names(self) -> Tuple[str, ...]:
        return self.x_vars + self.d_vars + self.params

    @property
    def size(self) -> int:
        return 2 * self.n + len(self.params)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"unknown generator '{name}' in ring {self.names}") from None

    def partner(self, name: str) -> Optional[str]:
        """The paired generator of an x or d variable, None for parameters."""
        i = self.index(name)
        if i < self.n:
            return self.d_vars[i]
        if i < 2 * self.n:
            return self.x_vars[i - self.n]
        return None

    def with_params(self, extra: Sequence[str], homogenizer: Optional[str] = None) -> "WeylRing":
        return WeylRing(self.x_vars, self.d_vars, self.params + tuple(extra), homogenizer or self.homogenizer)

    def zero(self) -> "WeylElement":
        return WeylElement(self, {})

    def constant(self, value: Scalar) -> "WeylElement":
        return WeylElement(self, {(0,) * self.size: value})

    def one(self) -> "WeylElement":
        return self.constant(1)

    def gen(self, name: str) -> "WeylElement":
        i = self.index(name)
        return WeylElement(self, {tuple(1 if j == i else 0 for j in range(self.size)): 1})

    def monomial(self, exps: Sequence[int], coeff: Scalar = 1) -> "WeylElement":
        return WeylElement(self, {tuple(exps): coeff})

    def from_polynomial(self, poly: Polynomial) -> "WeylElement":
        """Embed a polynomial in x variables and parameters."""
        allowed = self.x_vars + self.params
        index = []
        for name in poly.variables:
            if name not in allowed:
                raise ValueError(f"'{name}' is not an x variable or parameter of {self.names}")
            index.append(self.index(name))
        terms = {}
        for exps, c in poly.terms.items():
            target = [0] * self.size
            for j, e in zip(index, exps):
                target[j] += e
            terms[tuple(target)] = c
        return WeylElement(self, terms)

    def monomial_product(self, e1: Monomial, e2: Monomial) -> Tuple[Tuple[Monomial, int], ...]:
        hidx = None
        if self.homogenizer is not None:
            hidx = self.params.index(self.homogenizer)
        return _monomial_product(self.n, hidx, e1, e2)


class WeylElement:
    """
    A normally ordered element of a `WeylRing`.

    Every term is coeff * x^a * d^b * params^c. Equal elements have equal
    term maps. Instances are treated as immutable.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: WeylRing, terms: Optional[Mapping[Monomial, Scalar]] = None):
        self.ring = ring
        clean: Dict[Monomial, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != ring.size:
                raise ValueError(f"monomial {exps} does not match ring {ring.names}")
            c = to_fraction(coeff)
            if c:
                clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, ring: WeylRing, terms: Dict[Monomial, Fraction]) -> "WeylElement":
        element = cls.__new__(cls)
        element.ring = ring
        element.terms = terms
        return element

    def _coerce(self, other) -> "WeylElement":
        if isinstance(other, WeylElement):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring.names} vs {other.ring.names}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        if isinstance(other, Polynomial):
            return self.ring.from_polynomial(other)
        raise TypeError(f"cannot combine WeylElement with {type(other).__name__}")

    def __add__(self, other) -> "WeylElement":
        other = self._coerce(other)
        result = dict(self.terms)
        for exps, c in other.terms.items():
            total = result.get(exps, 0) + c
            if total:
                result[exps] = total
            else:
                result.pop(exps, None)
        return WeylElement._raw(self.ring, result)

    __radd__ = __add__

    def __neg__(self) -> "WeylElement":
        return WeylElement._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "WeylElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "WeylElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "WeylElement":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return normal_order_product(self, self._coerce(other))

    def __rmul__(self, other) -> "WeylElement":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return normal_order_product(self._coerce(other), self)

    def __pow__(self, power: int) -> "WeylElement":
        if power < 0:
            raise ValueError("negative powers are not defined in the Weyl algebra")
        result = self.ring.one()
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def scale(self, factor: Scalar) -> "WeylElement":
        factor = to_fraction(factor)
        if not factor:
            return self.ring.zero()
        return WeylElement._raw(self.ring, {e: c * factor for e, c in self.terms.items()})

    def involves(self, names: Sequence[str]) -> bool:
        """True when some term has a positive exponent on one of `names`."""
        idx = [self.ring.index(name) for name in names]
        return any(exps[i] for exps in self.terms for i in idx)

    def has_derivations(self) -> bool:
        n = self.ring.n
        return any(any(exps[n : 2 * n]) for exps in self.terms)

    def specialize(self, name: str, value: Scalar) -> "WeylElement":
        """Set the parameter `name` to a scalar; the result lives in the same ring."""
        i = self.ring.index(name)
        if i < 2 * self.ring.n:
            raise ValueError(f"only parameters can be specialized, not '{name}'")
        value = to_fraction(value)
        result: Dict[Monomial, Fraction] = {}
        for exps, c in self.terms.items():
            lowered = exps[:i] + (0,) + exps[i + 1 :]
            total = result.get(lowered, 0) + c * value ** exps[i]
            if total:
                result[lowered] = total
            else:
                result.pop(lowered, None)
        return WeylElement._raw(self.ring, result)

    def to_ring(self, target: WeylRing) -> "WeylElement":
        """
        Move this element into `target` by generator names.

        Generators that are used must exist in `target` with the same role;
        unused generators are dropped.
        """
        source = self.ring
        used = [i for i in range(source.size) if any(e[i] for e in self.terms)]
        mapping = {}
        for i in used:
            name = source.names[i]
            j = target.index(name)
            same_role = (
                (i < source.n and j < target.n)
                or (source.n <= i < 2 * source.n and target.n <= j < 2 * target.n)
                or (i >= 2 * source.n and j >= 2 * target.n)
            )
            if not same_role:
                raise ValueError(f"generator '{name}' changes role between rings")
            mapping[i] = j
        terms = {}
        for exps, c in self.terms.items():
            out = [0] * target.size
            for i, j in mapping.items():
                out[j] = exps[i]
            terms[tuple(out)] = c
        return WeylElement._raw(target, terms)

    def to_polynomial(self) -> Polynomial:
        """The commutative polynomial in x variables and parameters, if no d occurs."""
        if self.has_derivations():
            raise ValueError(f"{self} involves derivations and is not a polynomial")
        ring = self.ring
        keep = list(range(ring.n)) + list(range(2 * ring.n, ring.size))
        return Polynomial(
            ring.x_vars + ring.params,
            {tuple(exps[i] for i in keep): c for exps, c in self.terms.items()},
        )

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True))

    def __str__(self) -> str:
        return format_terms(self.ring.names, self.terms)

    def __repr__(self) -> str:
        return f"WeylElement({str(self)!r})"


def normal_order_product(a: WeylElement, b: WeylElement) -> WeylElement:
    """
    Product of two Weyl algebra elements, rewritten into normal order.

    Every d^b x^c in the middle of a term product is expanded by the Leibniz
    rule; parameters pass through.

    Raises:
        ValueError: If the elements live in different rings
    """
    if a.ring != b.ring:
        raise ValueError(f"ring mismatch: {a.ring.names} vs {b.ring.names}")
    ring = a.ring
    result: Dict[Monomial, Fraction] = {}
    for e1, c1 in a.terms.items():
        for e2, c2 in b.terms.items():
            c12 = c1 * c2
            for exps, k in ring.monomial_product(e1, e2):
                total = result.get(exps, 0) + c12 * k
                if total:
                    result[exps] = total
                else:
                    result.pop(exps, None)
    return WeylElement._raw(ring, result)
