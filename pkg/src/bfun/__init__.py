"""Annihilators of f^s, Bernstein-Sato polynomials, certificates and the induced filtration."""

from src.bfun.annihilator import ann_fs
from src.bfun.bfunction import BFunction, bernstein_sato, jump_value, lct_from_bfunction, multiplier_membership
from src.bfun.certificate import Certificate, Verification, find_certificate, verify_certificate
from src.bfun.filtration import monomial_jump_values, v_filtration_table

__all__ = [
    "BFunction",
    "Certificate",
    "Verification",
    "ann_fs",
    "bernstein_sato",
    "find_certificate",
    "jump_value",
    "lct_from_bfunction",
    "monomial_jump_values",
    "multiplier_membership",
    "v_filtration_table",
    "verify_certificate",
]
