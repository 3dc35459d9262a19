import logging
from typing import Any, Dict

from src.bfun.bfunction import METHODS
from src.newton.ideal import MonomialIdeal, MultiplierTable
from src.newton.inner import inner_jumping_multiplicity
from src.newton.multiplier import jumping_numbers_monomial, lct_monomial, multiplier_ideal_generators
from src.newton.polyhedron import newton_polyhedron
from src.routes.base import Request, Route, RouteResult, cross_check
from src.routes.bfunction import ANN_METHODS

logging.basicConfig(
    level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)


def _decreasing(table: MultiplierTable) -> bool:
    """Each ideal in the table lies inside the one before it."""
    for before, after in zip(table.entries, table.entries[1:]):
        ideal = MonomialIdeal(before.generators, table.n)
        if before.generators == after.generators:
            return False
        if not all(ideal.contains(g) for g in after.generators):
            return False
    return True


class NewtonRoute(Route):
    """
    Answers commands on monomial ideals through Newton polyhedra, and
    inner jumping multiplicities of polynomials.

    Config options:
        - dimension_cap: Largest number of variables accepted (default: 6)
        - method: b-function method for polynomial `inner` (default: linear)
        - ann_method: Annihilator method for polynomial `inner` (default: auto)
        - max_bfunction_degree: Degree bound of the linear b-function search (default: 40)
        - workers: Processes computing monomial b-functions (default: 1)
        - verbose_logging: Log b-function progress at INFO (default: False)
    """

    name = "newton"
    commands = ("lct", "mult-table", "jumping", "inner")

    def _validate_config(self) -> None:
        """
        Validate the configuration for the Newton route.

        Raises:
            ValueError: If a method is unknown or a bound is not positive
        """
        self.config.setdefault("dimension_cap", 6)
        self.config.setdefault("method", "linear")
        self.config.setdefault("ann_method", "auto")
        self.config.setdefault("max_bfunction_degree", 40)
        self.config.setdefault("workers", 1)
        self.config.setdefault("verbose_logging", False)

        if self.config["dimension_cap"] < 1:
            logger.error(f"Invalid dimension cap: {self.config['dimension_cap']}")
            raise ValueError(f"dimension_cap must be positive, got {self.config['dimension_cap']}")
        if self.config["method"] not in METHODS:
            logger.error(f"Unknown b-function method: {self.config['method']}")
            raise ValueError(f"method must be one of {METHODS}, got {self.config['method']!r}")
        if self.config["ann_method"] not in ANN_METHODS:
            logger.error(f"Unknown annihilator method: {self.config['ann_method']}")
            raise ValueError(f"ann_method must be one of {ANN_METHODS}, got {self.config['ann_method']!r}")
        for key in ("max_bfunction_degree", "workers"):
            if self.config[key] < 1:
                raise ValueError(f"{key} must be positive, got {self.config[key]}")

    def execute(self, request: Request) -> RouteResult:
        """
        Run a Newton polyhedron command.

        Raises:
            ValueError: If the command is not handled here or its input is invalid
        """
        if request.command not in self.commands:
            raise ValueError(f"the newton route does not handle '{request.command}'")
        if request.command == "inner":
            return self._inner(request)
        ideal = self._ideal(request)
        cap = self.config["dimension_cap"]
        if request.command == "lct":
            value = lct_monomial(ideal, cap)
            return RouteResult({"lct": str(value)}, [f"lct = {value}"])
        if request.command == "mult-table" and request.alpha is not None:
            generators = multiplier_ideal_generators(newton_polyhedron(ideal, cap), request.alpha)
            text = MonomialIdeal(generators, ideal.n).format(request.variables) if generators else "()"
            return RouteResult({"alpha": str(request.alpha), "ideal": text}, [f"J({request.alpha}) = {text}"])
        table = jumping_numbers_monomial(ideal, request.alpha_max, request.degree_bound, cap)
        checks = [
            cross_check("ideals strictly decreasing", _decreasing(table)),
            cross_check("lct is the first jump", not table.entries or table.alphas[0] == lct_monomial(ideal, cap)),
        ]
        if request.command == "jumping":
            alphas = [str(a) for a in table.alphas]
            return RouteResult(
                {"jumping_numbers": alphas, "table": table.to_rows(request.variables)},
                ["jumping numbers: " + (", ".join(alphas) or "none")],
                checks,
            )
        rows = table.to_rows(request.variables)
        text = [f"J({row['alpha']}) = ({', '.join(row['ideal'])})" for row in rows]
        return RouteResult({"table": rows}, text, checks)

    def _ideal(self, request: Request) -> MonomialIdeal:
        if request.ideal is None:
            raise ValueError(f"{request.command} on the newton route needs --monomial")
        return request.ideal

    def _inner(self, request: Request) -> RouteResult:
        alpha = request.require_alpha()
        target = request.ideal if request.ideal is not None else request.f
        value = inner_jumping_multiplicity(
            target,
            alpha,
            request.degree_bound,
            self.config["dimension_cap"],
            variables=request.variables,
            method=self.config["method"],
            ann_method=self.config["ann_method"],
            max_degree=self.config["max_bfunction_degree"],
            workers=self.config["workers"],
            verbose=self.config["verbose_logging"],
        )
        return RouteResult({"alpha": str(alpha), "inner_multiplicity": value}, [f"n_{alpha} = {value}"])

    def get_metadata(self) -> Dict[str, Any]:
        """
        Get metadata about the Newton route.

        Returns:
            Dict[str, Any]: Dictionary containing metadata about the route
        """
        return {"route": self.name, "commands": list(self.commands), "dimension_cap": self.config["dimension_cap"]}
