import heapq
import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.exactmath.polynomial import Monomial
from src.weyl.orders import OrderSpec, check_admissible, divides, order_key
from src.weyl.ring import WeylElement, WeylRing, normal_order_product

logger = logging.getLogger(__name__)

HOMOGENIZER = "_h"

Entry = Tuple[WeylElement, Monomial, Fraction]


def _log(verbose: bool, message: str) -> None:
    logger.log(logging.INFO if verbose else logging.DEBUG, message)


def _cached(key: Callable[[Monomial], tuple]) -> Callable[[Monomial], tuple]:
    return lru_cache(maxsize=None)(key)


def leading_term(p: WeylElement, key: Callable[[Monomial], tuple]) -> Tuple[Monomial, Fraction]:
    if p.is_zero():
        raise ValueError("the zero element has no leading term")
    lm = max(p.terms, key=key)
    return lm, p.terms[lm]


def _monic(p: WeylElement, key) -> WeylElement:
    _, lc = leading_term(p, key)
    return p.scale(1 / lc)


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(u, v) for u, v in zip(a, b))


def _reduce(
    p: WeylElement,
    basis: Sequence[Entry],
    key,
    pos: Optional[int],
    full: bool = True,
) -> WeylElement:
    """Left division of `p` by `basis`; with full=False only the leading term is reduced."""
    ring = p.ring
    work: Dict[Monomial, Fraction] = dict(p.terms)
    remainder: Dict[Monomial, Fraction] = {}
    while work:
        lm = max(work, key=key)
        c = work[lm]
        for g, glm, glc in basis:
            if divides(glm, lm, pos):
                q = tuple(a - b for a, b in zip(lm, glm))
                factor = c / glc
                for exps, gc in normal_order_product(ring.monomial(q), g).terms.items():
                    total = work.get(exps, 0) - factor * gc
                    if total:
                        work[exps] = total
                    else:
                        work.pop(exps, None)
                break
        else:
            if not full:
                remainder.update(work)
                break
            remainder[lm] = c
            del work[lm]
    return WeylElement._raw(ring, remainder)


def _buchberger(
    gens: Sequence[WeylElement], key, pos: Optional[int], verbose: bool = False
) -> List[WeylElement]:
    ring = gens[0].ring
    basis: List[Entry] = []
    commutative: List[bool] = []
    pairs: List[tuple] = []
    pending = set()
    counter = itertools.count()
    unit = ring.one()

    def add(g: WeylElement) -> None:
        g = _monic(g, key)
        lm, _ = leading_term(g, key)
        idx = len(basis)
        basis.append((g, lm, Fraction(1)))
        commutative.append(not g.has_derivations())
        for i in range(idx):
            other = basis[i][1]
            if pos is not None and other[pos] != lm[pos]:
                continue
            heapq.heappush(pairs, (sum(_lcm(other, lm)), next(counter), i, idx))
            pending.add((i, idx))

    for g in gens:
        r = _reduce(g, basis, key, pos, full=False)
        if r.is_zero():
            continue
        if r.is_constant():
            return [unit]
        add(r)

    processed = 0
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        pending.discard((i, j))
        gi, mi, _ = basis[i]
        gj, mj, _ = basis[j]
        lcm = _lcm(mi, mj)
        if pos is None and commutative[i] and commutative[j]:
            if all(not (a and b) for a, b in zip(mi, mj)):
                continue
        if any(
            k != i
            and k != j
            and divides(basis[k][1], lcm, pos)
            and (min(i, k), max(i, k)) not in pending
            and (min(j, k), max(j, k)) not in pending
            for k in range(len(basis))
        ):
            continue
        qi = ring.monomial(tuple(a - b for a, b in zip(lcm, mi)))
        qj = ring.monomial(tuple(a - b for a, b in zip(lcm, mj)))
        s = normal_order_product(qi, gi) - normal_order_product(qj, gj)
        processed += 1
        r = _reduce(s, basis, key, pos, full=False)
        if r.is_zero():
            continue
        if r.is_constant():
            _log(verbose, f"unit ideal detected after {processed} pairs")
            return [unit]
        add(r)
    _log(verbose, f"processed {processed} pairs, raw basis size {len(basis)}")
    return _finalize([g for g, _, _ in basis], key, pos)


def _minimalize(elements: Sequence[WeylElement], key, pos: Optional[int]) -> List[WeylElement]:
    ordered = sorted(elements, key=lambda g: key(leading_term(g, key)[0]))
    kept: List[Tuple[WeylElement, Monomial]] = []
    for g in ordered:
        lm, _ = leading_term(g, key)
        if not any(divides(other, lm, pos) for _, other in kept):
            kept.append((g, lm))
    return [g for g, _ in kept]


def _finalize(elements: Sequence[WeylElement], key, pos: Optional[int]) -> List[WeylElement]:
    minimal = _minimalize(elements, key, pos)
    entries = [(g, leading_term(g, key)[0], Fraction(1)) for g in minimal]
    reduced = []
    for idx, (g, _, _) in enumerate(entries):
        others = entries[:idx] + entries[idx + 1 :]
        reduced.append(_monic(_reduce(g, others, key, pos), key))
    reduced.sort(key=lambda g: key(leading_term(g, key)[0]))
    return reduced


def _homogenize(g: WeylElement, target: WeylRing) -> WeylElement:
    h = target.index(HOMOGENIZER)
    lifted = g.to_ring(target)
    top = max(sum(e) for e in lifted.terms)
    terms = {}
    for exps, c in lifted.terms.items():
        e = list(exps)
        e[h] += top - sum(exps)
        terms[tuple(e)] = c
    return WeylElement._raw(target, terms)


def _homogenized_groebner(gens: Sequence[WeylElement], order: OrderSpec, verbose: bool) -> List[WeylElement]:
    ring = gens[0].ring
    hring = ring.with_params([HOMOGENIZER], homogenizer=HOMOGENIZER)
    hkey = _cached(order_key(hring, order, homogenized=True))
    hpos = hring.index(order.position) if order.position is not None else None
    _log(verbose, f"homogenizing {len(gens)} generators for a mixed-sign weight order")
    hbasis = _buchberger([_homogenize(g, hring) for g in gens], hkey, hpos, verbose)
    key = _cached(order_key(ring, order))
    pos = ring.index(order.position) if order.position is not None else None
    seen = set()
    result = []
    for g in hbasis:
        d = g.specialize(HOMOGENIZER, 1).to_ring(ring)
        if d.is_zero():
            continue
        d = _monic(d, key)
        if d.is_constant():
            return [ring.one()]
        if d not in seen:
            seen.add(d)
            result.append(d)
    return _minimalize(result, key, pos)


def _check_gens(gens: Sequence[WeylElement]) -> List[WeylElement]:
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("left_groebner needs at least one nonzero generator")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError(f"ring mismatch: {g.ring.names} vs {ring.names}")
    return gens


def left_groebner(
    gens: Sequence[WeylElement], order: OrderSpec = OrderSpec(), verbose: bool = False
) -> List[WeylElement]:
    """
    Reduced left Gröbner basis of the left ideal generated by `gens`.

    Orders with negative weights are handled in the homogenized algebra and
    dehomogenized afterwards; that basis is minimal and monic but, lacking a
    well-order, not inter-reduced.

    Args:
        gens: Generators, all in the same ring
        order: Term order; must satisfy weight(x_i) + weight(d_i) >= 0
        verbose: Log pair statistics at INFO instead of DEBUG

    Returns:
        List[WeylElement]: The basis sorted by increasing leading monomial

    Raises:
        ValueError: If the generator list is empty or the order is inadmissible
    """
    gens = _check_gens(gens)
    ring = gens[0].ring
    check_admissible(ring, order)
    if not order.is_well_order(ring):
        return _homogenized_groebner(gens, order, verbose)
    key = _cached(order_key(ring, order))
    pos = ring.index(order.position) if order.position is not None else None
    return _buchberger(gens, key, pos, verbose)


def normal_form(p: WeylElement, gb: Sequence[WeylElement], order: OrderSpec = OrderSpec()) -> WeylElement:
    """
    Remainder of `p` on left division by the Gröbner basis `gb`.

    Raises:
        ValueError: If the order is not a well-order or the rings differ
    """
    ring = p.ring
    check_admissible(ring, order)
    if not order.is_well_order(ring):
        raise ValueError("normal_form needs a well-order; mixed-sign weights are not one")
    key = _cached(order_key(ring, order))
    pos = ring.index(order.position) if order.position is not None else None
    entries = []
    for g in gb:
        if g.ring != ring:
            raise ValueError(f"ring mismatch: {g.ring.names} vs {ring.names}")
        if g.is_zero():
            continue
        lm, lc = leading_term(g, key)
        entries.append((g, lm, lc))
    return _reduce(p, entries, key, pos)


def check_elimination_set(ring: WeylRing, kill: Sequence[str]) -> None:
    """
    Raises:
        ValueError: If `kill` names an x or d variable without its partner
    """
    kill = set(kill)
    for name in sorted(kill):
        partner = ring.partner(name)
        if partner is not None and partner not in kill:
            raise ValueError(
                f"inadmissible elimination: '{name}' is eliminated but its partner '{partner}' is not"
            )


def eliminate(
    gens: Sequence[WeylElement],
    kill: Sequence[str],
    position: Optional[str] = None,
    verbose: bool = False,
) -> List[WeylElement]:
    """
    Generators of the intersection of the left ideal with the subalgebra
    not involving `kill`.

    Args:
        gens: Generators of the left ideal
        kill: Union of (x_i, d_i) pairs and/or parameters
        position: Optional module position parameter, compared first

    Returns:
        List[WeylElement]: Basis elements free of every name in `kill`

    Raises:
        ValueError: If `kill` splits an (x_i, d_i) pair
    """
    gens = _check_gens(gens)
    ring = gens[0].ring
    check_elimination_set(ring, kill)
    order = OrderSpec.elimination(kill, position=position)
    basis = left_groebner(gens, order, verbose)
    if not kill:
        return basis
    return [g for g in basis if not g.involves(list(kill))]


def initial_forms(gens: Sequence[WeylElement], weights: Dict[str, Fraction]) -> List[WeylElement]:
    """
    Weight-initial forms of a Gröbner basis of `gens` for the given weights.

    Each form keeps the terms of maximal weight; the forms generate the
    initial ideal of the left ideal.
    """
    gens = _check_gens(gens)
    ring = gens[0].ring
    order = OrderSpec.weight(weights)
    w = order.weight_vector(ring)
    key = _cached(order_key(ring, order))
    forms = []
    for g in left_groebner(gens, order):
        top = max(sum(a * b for a, b in zip(w, e)) for e in g.terms)
        form = WeylElement(
            ring, {e: c for e, c in g.terms.items() if sum(a * b for a, b in zip(w, e)) == top}
        )
        forms.append(_monic(form, key))
    forms.sort(key=lambda g: key(leading_term(g, key)[0]))
    return forms
