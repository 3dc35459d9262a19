import logging
from dataclasses import dataclass
from fractions import Fraction

from src.exactmath.polynomial import Polynomial
from src.newton.inner import inner_jumping_multiplicity
from src.spectrum.hodge import hodge_spectrum

logger = logging.getLogger(__name__)

CONVENTION = "n_alpha(f) = multiplicity of alpha in the positive spectrum, n = number of variables"


@dataclass(frozen=True)
class TheoremReport:
    """Spectrum multiplicity and inner jumping multiplicity at one alpha."""

    alpha: Fraction
    spectrum_multiplicity: int
    inner_multiplicity: int
    convention: str = CONVENTION

    @property
    def equal(self) -> bool:
        return self.spectrum_multiplicity == self.inner_multiplicity


def check_spectrum_vs_inner(f: Polynomial, alpha: Fraction, degree_bound: int = 6, **kwargs) -> TheoremReport:
    """
    Compare the spectrum multiplicity of alpha with the inner jumping multiplicity.

    Both sides are computed independently: the spectrum from the Milnor
    algebra, the inner multiplicity from b-functions or Newton polyhedra.

    Raises:
        ValueError: If alpha is outside (0, 1] or either side is not computable
    """
    if not 0 < alpha <= 1:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    spectrum = hodge_spectrum(f)
    inner = inner_jumping_multiplicity(f, alpha, degree_bound, **kwargs)
    report = TheoremReport(alpha, spectrum.multiplicity(alpha), inner)
    if not report.equal:
        logger.warning(
            f"spectrum multiplicity {report.spectrum_multiplicity} differs from inner multiplicity "
            f"{report.inner_multiplicity} at {alpha} for {f}"
        )
    return report
