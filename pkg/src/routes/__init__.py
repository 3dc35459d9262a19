from src.routes.base import COMMANDS, Request, Route, RouteResult, cross_check
from src.routes.bfunction import BFunctionRoute
from src.routes.newton import NewtonRoute
from src.routes.spectrum import SpectrumRoute

__all__ = [
    "COMMANDS",
    "Request",
    "Route",
    "RouteResult",
    "cross_check",
    "BFunctionRoute",
    "NewtonRoute",
    "SpectrumRoute",
]
