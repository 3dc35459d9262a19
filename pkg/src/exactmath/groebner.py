import itertools
import logging
from typing import List, Sequence

import sympy

from src.exactmath.polynomial import Monomial, Polynomial, grevlex_key

logger = logging.getLogger(__name__)

_ORDERS = {"grevlex": "grevlex", "lex": "lex", "grlex": "grlex"}


def _order_key(order: str):
    if order == "grevlex":
        return grevlex_key
    if order == "lex":
        return lambda e: e
    return lambda e: (sum(e), e)


def leading_monomial(p: Polynomial, order: str = "grevlex") -> Monomial:
    return max(p.terms, key=_order_key(order))


def commutative_groebner(gens: Sequence[Polynomial], order: str = "grevlex") -> List[Polynomial]:
    """
    Reduced Gröbner basis of the ideal generated by `gens`.

    The basis is monic and sorted by increasing leading monomial, so the
    output is a deterministic function of the ideal and the order.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("commutative_groebner needs a nonzero generator")
    if order not in _ORDERS:
        raise ValueError(f"unsupported monomial order '{order}'")
    variables = gens[0].variables
    for g in gens:
        if g.variables != variables:
            raise ValueError(f"ring mismatch: {g.variables} vs {variables}")
    symbols = sympy.symbols(variables)
    basis = sympy.groebner(
        [g.to_sympy().as_expr() for g in gens], *symbols, order=_ORDERS[order], domain=sympy.QQ
    )
    key = _order_key(order)
    result = []
    for poly in basis.polys:
        p = Polynomial.from_sympy(poly, variables)
        lm = leading_monomial(p, order)
        result.append(p.scale(1 / p.terms[lm]))
    result.sort(key=lambda p: key(leading_monomial(p, order)))
    logger.debug(f"commutative basis of {len(gens)} generators has {len(result)} elements")
    return result


def is_zero_dimensional(basis: Sequence[Polynomial], order: str = "grevlex") -> bool:
    """True when every variable has a pure power among the leading monomials."""
    if not basis:
        return False
    n = len(basis[0].variables)
    leads = [leading_monomial(p, order) for p in basis]
    for i in range(n):
        if not any(lm[i] > 0 and sum(lm) == lm[i] for lm in leads) and not any(
            sum(lm) == 0 for lm in leads
        ):
            return False
    return True


def standard_monomials(basis: Sequence[Polynomial], order: str = "grevlex") -> List[Monomial]:
    """
    Monomials not divisible by any leading monomial of a zero-dimensional basis.

    Returned in increasing order under `order`.
    """
    if not is_zero_dimensional(basis, order):
        raise ValueError("the ideal is not zero-dimensional")
    n = len(basis[0].variables)
    leads = [leading_monomial(p, order) for p in basis]
    if any(sum(lm) == 0 for lm in leads):
        return []
    bounds = []
    for i in range(n):
        bounds.append(min(lm[i] for lm in leads if lm[i] > 0 and sum(lm) == lm[i]))
    found = []
    for exps in itertools.product(*(range(b) for b in bounds)):
        if not any(all(e >= l for e, l in zip(exps, lm)) for lm in leads):
            found.append(tuple(exps))
    found.sort(key=_order_key(order))
    return found
