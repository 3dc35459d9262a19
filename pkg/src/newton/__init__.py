"""Monomial ideals, Newton polyhedra and their multiplier ideals."""

from src.newton.ideal import JumpEntry, MonomialIdeal, MultiplierTable, minimal_monomials
from src.newton.multiplier import (
    jumping_numbers_monomial,
    lct_monomial,
    mixed_multiplier_ideal,
    multiplier_ideal_generators,
    multiplier_ideal_monomial,
)
from src.newton.polyhedron import Facet, NewtonPolyhedron, newton_polyhedron

__all__ = [
    "Facet",
    "JumpEntry",
    "MonomialIdeal",
    "MultiplierTable",
    "NewtonPolyhedron",
    "jumping_numbers_monomial",
    "lct_monomial",
    "minimal_monomials",
    "mixed_multiplier_ideal",
    "multiplier_ideal_generators",
    "multiplier_ideal_monomial",
    "newton_polyhedron",
]
