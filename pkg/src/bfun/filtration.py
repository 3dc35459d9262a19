import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial
from typing import Dict, List, Optional, Sequence

from src.exactmath.polynomial import Monomial, Polynomial, monomials_up_to
from src.bfun.annihilator import ann_fs
from src.bfun.bfunction import bernstein_sato
from src.newton.ideal import JumpEntry, MultiplierTable, minimal_monomials
from src.weyl.ring import WeylElement

logger = logging.getLogger(__name__)

ABOVE = "above"


def _jump_value(
    f: Polynomial, ann: Sequence[WeylElement], method: str, max_degree: int, verbose: bool, v: Monomial
) -> Optional[Fraction]:
    h = Polynomial.monomial(f.variables, v)
    b = bernstein_sato(f, h, method=method, ann=ann, max_degree=max_degree, verbose=verbose)
    return None if b.largest_root is None else -b.largest_root


def monomial_jump_values(
    f: Polynomial,
    degree_bound: int,
    alpha_limit: Optional[Fraction] = None,
    workers: int = 1,
    method: str = "linear",
    ann_method: str = "auto",
    max_degree: int = 40,
    verbose: bool = False,
) -> Dict[Monomial, object]:
    """
    Jump values alpha_h for the monomials h of degree <= degree_bound.

    With `alpha_limit`, a monomial with a divisor already above the limit is
    marked ABOVE without computing its b-function. None marks b_{f,h} = 1.
    With `workers` > 1 the b-functions of one degree are computed in that many
    processes. Results do not depend on `workers`.
    """
    if degree_bound < 0:
        raise ValueError(f"degree_bound must be non-negative, got {degree_bound}")
    ann = ann_fs(f, ann_method, verbose)
    values: Dict[Monomial, object] = {}
    compute = partial(_jump_value, f, tuple(ann), method, max_degree, verbose)

    def above(value) -> bool:
        return value == ABOVE or value is None or (alpha_limit is not None and value > alpha_limit)

    by_degree: Dict[int, List[Monomial]] = {}
    for v in monomials_up_to(len(f.variables), degree_bound):
        by_degree.setdefault(sum(v), []).append(v)
    for degree in sorted(by_degree):
        pending = []
        for v in by_degree[degree]:
            divisors = [v[:i] + (v[i] - 1,) + v[i + 1 :] for i in range(len(v)) if v[i]]
            if alpha_limit is not None and any(above(values[d]) for d in divisors):
                values[v] = ABOVE
            else:
                pending.append(v)
        if workers > 1 and len(pending) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(compute, pending))
        else:
            results = [compute(v) for v in pending]
        values.update(zip(pending, results))
        logger.log(
            logging.INFO if verbose else logging.DEBUG,
            f"degree {degree}: {len(pending)} b-functions computed, {len(by_degree[degree]) - len(pending)} skipped",
        )
    return values


def _exceeds(value, alpha: Fraction) -> bool:
    return value == ABOVE or value is None or value > alpha


def v_filtration_table(
    f: Polynomial,
    degree_bound: int,
    alpha_max: Fraction,
    workers: int = 1,
    **kwargs,
) -> MultiplierTable:
    """
    Truncated multiplier ideals J(alpha * Z) of Z = {f = 0} at their jumps.

    V^alpha of the functions equals J((alpha - eps) * Z), the ideal before
    the jump at alpha; each entry holds the monomials up to the bound that
    survive the jump.

    Raises:
        ValueError: If a bound is not positive
    """
    if degree_bound < 0 or alpha_max <= 0:
        raise ValueError(f"bounds must be positive, got degree {degree_bound} and alpha {alpha_max}")
    values = monomial_jump_values(f, degree_bound, alpha_max, workers, **kwargs)
    jumps = sorted({v for v in values.values() if isinstance(v, Fraction) and v <= alpha_max})
    entries = []
    for alpha in jumps:
        members = [m for m, value in values.items() if _exceeds(value, alpha)]
        entries.append(JumpEntry(alpha, minimal_monomials(members), complete=False))
    return MultiplierTable(tuple(entries), len(f.variables), degree_bound)


def monomials_at_jump(values: Dict[Monomial, object], alpha: Fraction) -> List[Monomial]:
    return sorted((m for m, value in values.items() if value == alpha), key=lambda e: (sum(e), e))
