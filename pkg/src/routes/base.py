from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from src.exactmath.polynomial import Polynomial
from src.exactmath.univariate import UnivariatePoly
from src.newton.ideal import MonomialIdeal
from src.weyl.ring import WeylElement

COMMANDS = (
    "bf",
    "verify",
    "lct",
    "mult-table",
    "jumping",
    "vfilt",
    "inner",
    "spectrum",
    "check-theorem",
)


@dataclass(frozen=True)
class Request:
    """
    One parsed command.

    Attributes:
        command: One of COMMANDS
        variables: Ordered variable names
        functions: The polynomials f (several only for `verify`)
        ideal: A monomial ideal given with --monomial
        numerator: The polynomial h, None for h = 1
        b: A candidate b-function for `verify`
        operators: Certificate operators for `verify`, one per function
        alpha: The jump point for `inner`, `check-theorem` and single-ideal `mult-table`
        degree_bound: Monomial truncation degree
        alpha_max: Upper end of the jump range
        echo: The raw input strings, reported back in json output
    """

    command: str
    variables: Tuple[str, ...]
    functions: Tuple[Polynomial, ...] = ()
    ideal: Optional[MonomialIdeal] = None
    numerator: Optional[Polynomial] = None
    b: Optional[UnivariatePoly] = None
    operators: Tuple[WeylElement, ...] = ()
    alpha: Optional[Fraction] = None
    degree_bound: int = 6
    alpha_max: Fraction = Fraction(2)
    echo: Dict[str, Any] = field(default_factory=dict)

    @property
    def f(self) -> Polynomial:
        """
        The single polynomial of the request.

        Raises:
            ValueError: If there is not exactly one polynomial
        """
        if len(self.functions) != 1:
            raise ValueError(f"{self.command} needs exactly one polynomial, got {len(self.functions)}")
        return self.functions[0]

    def require_alpha(self) -> Fraction:
        if self.alpha is None:
            raise ValueError(f"{self.command} needs --alpha")
        return self.alpha


@dataclass
class RouteResult:
    """
    Outcome of one command.

    Attributes:
        result: JSON-ready result payload
        text: Lines of the plain-text report
        cross_checks: Independent checks that were run, each with a name and a verdict
    """

    result: Dict[str, Any]
    text: List[str]
    cross_checks: List[Dict[str, Any]] = field(default_factory=list)


class Route(ABC):
    """
    Abstract base class for all computation routes.

    A route owns one family of algorithms (b-functions, Newton polyhedra,
    spectra) and answers the CLI commands that family can compute.
    """

    name: str = ""
    commands: Tuple[str, ...] = ()

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """
        Initialize the route with optional configuration.

        Args:
            config: Optional configuration dictionary for the route
        """
        self.config = dict(config or {})
        self._validate_config()

    @abstractmethod
    def _validate_config(self) -> None:
        """
        Validate the configuration provided to the route.

        Raises:
            ValueError: If the configuration is invalid
        """
        pass

    @abstractmethod
    def execute(self, request) -> RouteResult:
        """
        Run one request.

        Args:
            request: A parsed CLI request whose command is in `commands`

        Returns:
            RouteResult: The result payload, text lines and cross-checks

        Raises:
            ValueError: On usage errors
            RuntimeError: On internal invariant failures
        """
        pass

    @abstractmethod
    def get_metadata(self) -> Dict[str, Any]:
        """
        Get metadata about the route.

        Returns:
            Dict[str, Any]: Dictionary containing metadata about the route
        """
        pass


def cross_check(name: str, passed: bool, detail: str = "") -> Dict[str, Any]:
    """A cross-check record for the provenance block."""
    return {"name": name, "passed": passed, "detail": detail}
