import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from src.exactmath.polynomial import Polynomial
from src.spectrum.milnor import milnor_basis
from src.spectrum.weights import infer_weights

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectrumTable:
    """Spectrum exponents in (0, n) with their multiplicities, in increasing order."""

    entries: Tuple[Tuple[Fraction, int], ...]
    n: int

    def multiplicity(self, alpha: Fraction) -> int:
        return dict(self.entries).get(alpha, 0)

    @property
    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def is_symmetric(self) -> bool:
        table = dict(self.entries)
        return all(table.get(self.n - alpha, 0) == m for alpha, m in table.items())

    def as_dict(self) -> Dict[str, int]:
        return {str(alpha): m for alpha, m in self.entries}


def hodge_spectrum(f: Polynomial) -> SpectrumTable:
    """
    Spectrum of a quasi-homogeneous isolated singularity.

    Each Milnor basis monomial x^a contributes the exponent
    sum_i (a_i + 1) * w_i.

    Raises:
        ValueError: If f has no positive weight system or the singularity is not isolated
    """
    weights = infer_weights(f)
    counts: Dict[Fraction, int] = {}
    for exps in milnor_basis(f):
        alpha = sum((w * (a + 1) for w, a in zip(weights.weights, exps)), Fraction(0))
        counts[alpha] = counts.get(alpha, 0) + 1
    table = SpectrumTable(tuple(sorted(counts.items())), len(f.variables))
    if not table.is_symmetric():
        raise RuntimeError(f"spectrum {table.as_dict()} of {f} is not symmetric")
    return table
