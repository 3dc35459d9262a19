"""Weight systems, Milnor algebras and Hodge spectra of quasi-homogeneous singularities."""

from src.spectrum.hodge import SpectrumTable, hodge_spectrum
from src.spectrum.milnor import milnor_basis, milnor_number
from src.spectrum.weights import WeightSystem, infer_weights

__all__ = ["SpectrumTable", "WeightSystem", "hodge_spectrum", "infer_weights", "milnor_basis", "milnor_number"]
