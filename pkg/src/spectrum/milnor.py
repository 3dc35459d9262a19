import logging
from typing import List

from src.exactmath.groebner import commutative_groebner, is_zero_dimensional, standard_monomials
from src.exactmath.polynomial import Monomial, Polynomial

logger = logging.getLogger(__name__)


def jacobian_ideal(f: Polynomial) -> List[Polynomial]:
    return [f.diff(x) for x in f.variables if not f.diff(x).is_zero()]


def milnor_basis(f: Polynomial) -> List[Monomial]:
    """
    Standard monomials of Q[x] / (df/dx_1, ..., df/dx_n) under grevlex.

    Raises:
        ValueError: If the Jacobian ideal is not zero-dimensional
    """
    partials = jacobian_ideal(f)
    if len(partials) < len(f.variables):
        raise ValueError(f"the singularity of {f} is not isolated: a partial derivative vanishes")
    basis = commutative_groebner(partials, "grevlex")
    if not is_zero_dimensional(basis):
        raise ValueError(f"the singularity of {f} is not isolated: the Jacobian ideal is not zero-dimensional")
    monomials = standard_monomials(basis)
    logger.debug(f"Milnor number of {f}: {len(monomials)}")
    return monomials


def milnor_number(f: Polynomial) -> int:
    return len(milnor_basis(f))
