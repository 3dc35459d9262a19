import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Union

from src.exactmath.linalg import rank
from src.exactmath.polynomial import Monomial, Polynomial, format_monomial, monomials_up_to
from src.bfun.annihilator import ann_fs, s_ring
from src.bfun.bfunction import bernstein_sato, relation_basis
from src.bfun.filtration import monomial_jump_values, monomials_at_jump
from src.newton.ideal import MonomialIdeal
from src.newton.polyhedron import DEFAULT_DIMENSION_CAP, newton_polyhedron, polyhedron_of_points
from src.spectrum.weights import infer_weights
from src.weyl.groebner import normal_form
from src.weyl.ring import WeylElement, WeylRing

logger = logging.getLogger(__name__)


def _mixed_member(u, normals, alpha: Fraction) -> bool:
    """
    Membership in J((1 - eps) * alpha * a + delta * m) for 0 < eps << delta << 1.

    With A = <l, u> - alpha * h_a(l), the limit keeps u when A > 0, or when
    A = 0, h_m(l) = 0 and h_a(l) > 0, for every normal l.
    """
    for normal, h_a, h_m in normals:
        excess = sum(a * b for a, b in zip(normal, u)) - alpha * h_a
        if excess > 0:
            continue
        if excess == 0 and h_m == 0 and h_a > 0:
            continue
        return False
    return True


def _monomial_inner(
    a: MonomialIdeal, alpha: Fraction, degree_bound: int, dimension_cap: int, variables: Sequence[str]
) -> int:
    poly = newton_polyhedron(a, dimension_cap)
    n = a.n
    jumping = [v for v in monomials_up_to(n, degree_bound) if poly.threshold(v) == alpha]
    for v in jumping:
        if sum(v) == degree_bound:
            raise ValueError(
                f"the jump at {alpha} is not supported at the origin: "
                f"monomial {format_monomial(variables, v) or '1'} survives at degree {degree_bound}"
            )
    points = [tuple(g[j] + (1 if j == i else 0) for j in range(n)) for g in a.generators for i in range(n)]
    product = polyhedron_of_points(points, n, dimension_cap)
    normals = {f.normal for f in product.facets}
    normals.update(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
    table = [(normal, poly.support(normal), min(normal)) for normal in sorted(normals)]
    count = 0
    for v in jumping:
        u = [e + 1 for e in v]
        if not _mixed_member(u, table, alpha):
            count += 1
    logger.debug(f"inner multiplicity at {alpha}: {count} of {len(jumping)} jumping monomials")
    return count


def _quasi_homogeneous(f: Polynomial) -> bool:
    try:
        infer_weights(f)
    except ValueError:
        return False
    return True


def _unsupported(f: Polynomial, alpha: Fraction, v: Monomial, degree_bound: int) -> ValueError:
    return ValueError(
        f"the jump at {alpha} is not supported at the origin: "
        f"monomial {format_monomial(f.variables, v) or '1'} survives at degree {degree_bound}"
    )


def _root_product(ring: WeylRing, roots, keep) -> WeylElement:
    """prod (s - root)^mult over the roots of b_f with keep(-root)."""
    s = ring.gen("s")
    product = ring.one()
    for root, mult in roots:
        if keep(-root):
            product = product * (s - root) ** mult
    return product


def _kernel_rank(images: Sequence[WeylElement]) -> int:
    columns = sorted({e for p in images for e in p.terms})
    index = {m: i for i, m in enumerate(columns)}
    rows: List[Dict[int, Fraction]] = []
    for p in images:
        rows.append({index[e]: c for e, c in p.terms.items()})
    return rank(rows, len(columns))


def _rank_inner(
    f: Polynomial,
    alpha: Fraction,
    degree_bound: int,
    method: str = "linear",
    ann_method: str = "auto",
    max_degree: int = 40,
    verbose: bool = False,
    **_,
) -> int:
    """
    dim J((alpha - eps) * Z) / J(alpha * Z) by linear algebra in D[s] f^s / D[s] f^(s+1).

    A polynomial h lies in J((alpha - eps) * Z) when Q(s) h reduces to zero
    modulo Ann f^s + D[s] f, with Q the part of b_f whose roots -c satisfy
    c >= alpha; J(alpha * Z) uses c > alpha instead. The multiplicity is the
    difference of the two kernel dimensions on polynomials of degree <= bound.
    """
    ann = ann_fs(f, ann_method, verbose)
    b = bernstein_sato(f, method=method, ann=ann, max_degree=max_degree, verbose=verbose)
    gb = relation_basis(f, ann, verbose=verbose)
    ring = s_ring(f)
    at_or_above = _root_product(ring, b.roots, lambda c: c >= alpha)
    above = _root_product(ring, b.roots, lambda c: c > alpha)
    monomials = monomials_up_to(len(f.variables), degree_bound)
    hs = [ring.from_polynomial(Polynomial.monomial(f.variables, v)) for v in monomials]
    before = [normal_form(at_or_above * h, gb) for h in hs]
    after = [normal_form(above * h, gb) for h in hs]
    for v, image in zip(monomials, after):
        if sum(v) == degree_bound and not image.is_zero():
            raise _unsupported(f, alpha, v, degree_bound)
    count = _kernel_rank(after) - _kernel_rank(before)
    logger.log(
        logging.INFO if verbose else logging.DEBUG,
        f"inner multiplicity of {f} at {alpha}: {count} from {len(monomials)} monomials",
    )
    return count


def _principal_inner(f: Polynomial, alpha: Fraction, degree_bound: int, dimension_cap: int, **kwargs) -> int:
    if alpha == 1:
        infer_weights(f)
        terms = MonomialIdeal(tuple(f.terms), len(f.variables))
        return _monomial_inner(terms, alpha, degree_bound, dimension_cap, f.variables)
    if not _quasi_homogeneous(f):
        return _rank_inner(f, alpha, degree_bound, **kwargs)
    values = monomial_jump_values(f, degree_bound, alpha, **kwargs)
    jumping: List[Monomial] = monomials_at_jump(values, alpha)
    for v in jumping:
        if sum(v) == degree_bound:
            raise _unsupported(f, alpha, v, degree_bound)
    return len(jumping)


def inner_jumping_multiplicity(
    target: Union[MonomialIdeal, Polynomial],
    alpha: Fraction,
    degree_bound: int = 6,
    dimension_cap: int = DEFAULT_DIMENSION_CAP,
    variables: Optional[Sequence[str]] = None,
    **kwargs,
) -> int:
    """
    Dimension of the part of the jump at alpha supported at the origin.

    For a monomial ideal the quotient J((1-eps) alpha a) / J((1-eps) alpha a + delta m)
    is counted through the mixed Newton polyhedron. For a principal f with
    alpha < 1 the count is the number of monomials with jump value alpha when
    f is quasi-homogeneous, whose multiplier ideals are monomial, and a rank
    computation modulo Ann f^s + D[s] f otherwise. At alpha = 1 the mixed
    formula runs on the term ideal of a quasi-homogeneous f.

    Args:
        target: A monomial ideal or a polynomial f
        alpha: The jump point; in (0, 1] for a polynomial
        degree_bound: Truncation degree for the support check
        dimension_cap: Largest supported dimension
        variables: Names used in error messages for a monomial ideal
        **kwargs: Passed to the b-function computations

    Returns:
        int: The inner jumping multiplicity at the origin

    Raises:
        ValueError: If the jump is not point supported within the bound, alpha
            is out of range, or f is not quasi-homogeneous at alpha = 1
    """
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if isinstance(target, MonomialIdeal):
        names = variables or [f"x{i + 1}" for i in range(target.n)]
        return _monomial_inner(target, alpha, degree_bound, dimension_cap, names)
    if alpha > 1:
        raise ValueError(f"for a polynomial alpha must lie in (0, 1], got {alpha}")
    return _principal_inner(target, alpha, degree_bound, dimension_cap, **kwargs)
