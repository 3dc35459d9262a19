"""The Weyl algebra with central parameters, its Gröbner bases and its action on f^s."""

from src.weyl.action import FsElement, FsModule, annihilates, apply_to_fs, s_names
from src.weyl.groebner import eliminate, initial_forms, left_groebner, normal_form
from src.weyl.orders import OrderSpec, check_admissible
from src.weyl.ring import WeylElement, WeylRing, normal_order_product

__all__ = [
    "FsElement",
    "FsModule",
    "OrderSpec",
    "WeylElement",
    "WeylRing",
    "annihilates",
    "apply_to_fs",
    "check_admissible",
    "eliminate",
    "initial_forms",
    "left_groebner",
    "normal_form",
    "normal_order_product",
    "s_names",
]
