import logging
from typing import List

from src.exactmath.groebner import commutative_groebner, is_zero_dimensional
from src.exactmath.polynomial import Polynomial
from src.spectrum.weights import infer_weights
from src.weyl.groebner import eliminate, left_groebner
from src.weyl.orders import OrderSpec
from src.weyl.ring import WeylElement, WeylRing

logger = logging.getLogger(__name__)

METHODS = ("auto", "oaku")


def s_ring(f: Polynomial) -> WeylRing:
    """D[s] over the variables of f."""
    return WeylRing(f.variables, params=("s",))


def _euler_koszul(f: Polynomial) -> List[WeylElement]:
    """
    Annihilator of f^s for a quasi-homogeneous f with isolated singularity.

    Raises:
        ValueError: If f has no positive weight system or a non-isolated singularity
    """
    weights = infer_weights(f)
    partials = [f.diff(x) for x in f.variables]
    nonzero = [p for p in partials if not p.is_zero()]
    if not nonzero or not is_zero_dimensional(commutative_groebner(nonzero)):
        raise ValueError(f"the singular locus of {f} is not isolated")
    ring = s_ring(f)
    euler = -ring.gen("s")
    for x, d, w in zip(ring.x_vars, ring.d_vars, weights.weights):
        euler = euler + ring.gen(x) * ring.gen(d) * w
    gens = [euler]
    for i in range(ring.n):
        for j in range(i + 1, ring.n):
            koszul = ring.from_polynomial(partials[j]) * ring.gen(ring.d_vars[i]) - ring.from_polynomial(
                partials[i]
            ) * ring.gen(ring.d_vars[j])
            if not koszul.is_zero():
                gens.append(koszul)
    return gens


def _falling_product(ring: WeylRing, c: int) -> WeylElement:
    """t^c dt^c written in s, using t*dt = -s-1."""
    result = ring.one()
    s = ring.gen("s")
    for k in range(c):
        result = result * (-s - (1 + k))
    return result


def _malgrange(f: Polynomial, verbose: bool = False) -> List[WeylElement]:
    """
    Annihilator of f^s from the ideal <t - u f, d_i + u f_i dt, u v - 1>.

    After u and v are eliminated every basis element is homogeneous for
    weight(t) = -1, weight(dt) = 1; it is shifted to weight zero and
    t^c dt^c is rewritten as a polynomial in s.
    """
    ring = WeylRing(f.variables + ("_t",), tuple(f"d{x}" for x in f.variables) + ("_dt",), ("_u", "_v"))
    lifted = ring.from_polynomial(f)
    t, dt, u, v = (ring.gen(name) for name in ("_t", "_dt", "_u", "_v"))
    gens = [t - u * lifted, u * v - 1]
    for x, d in zip(f.variables, ring.d_vars):
        gens.append(ring.gen(d) + u * ring.from_polynomial(f.diff(x)) * dt)
    eliminated = eliminate(gens, ("_u", "_v"), verbose=verbose)
    logger.log(
        logging.INFO if verbose else logging.DEBUG,
        f"Malgrange ideal of {f}: {len(eliminated)} generators after eliminating u, v",
    )
    target = s_ring(f)
    ti, dti = ring.index("_t"), ring.index("_dt")
    n = target.n
    result = []
    for g in eliminated:
        weights = {e[dti] - e[ti] for e in g.terms}
        if len(weights) != 1:
            raise RuntimeError(f"eliminated element {g} is not weight homogeneous")
        m = weights.pop()
        if m > 0:
            g = t**m * g
        elif m < 0:
            g = dt ** (-m) * g
        image = target.zero()
        for exps, c in g.terms.items():
            a = exps[:n]
            b = exps[n + 1 : 2 * n + 1]
            head = target.monomial(a + b + (0,), c)
            image = image + head * _falling_product(target, exps[ti])
        if not image.is_zero():
            result.append(image)
    if not result:
        raise RuntimeError(f"no annihilating operator found for {f}")
    return result


def ann_fs(f: Polynomial, method: str = "auto", verbose: bool = False) -> List[WeylElement]:
    """
    Generators of the annihilator of f^s in D[s].

    Args:
        f: A nonconstant polynomial
        method: `auto` tries the Euler/Koszul generators of a quasi-homogeneous
            isolated singularity before the Malgrange ideal; `oaku` always uses
            the Malgrange ideal
        verbose: Log Gröbner statistics at INFO

    Returns:
        List[WeylElement]: A reduced Gröbner basis in D[s] under grevlex

    Raises:
        ValueError: If f is constant or the method is unknown
    """
    if f.is_constant():
        raise ValueError(f"ann_fs needs a nonconstant polynomial, got {f}")
    if method not in METHODS:
        raise ValueError(f"unknown annihilator method '{method}', expected one of {METHODS}")
    gens = None
    if method == "auto":
        try:
            gens = _euler_koszul(f)
            logger.debug(f"using Euler/Koszul generators for {f}")
        except ValueError as e:
            logger.debug(f"Euler/Koszul shortcut unavailable: {e}")
    if gens is None:
        gens = _malgrange(f, verbose)
    return left_groebner(gens, OrderSpec(), verbose)
