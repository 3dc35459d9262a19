import logging
from typing import Any, Dict

from src.routes.base import Request, Route, RouteResult, cross_check
from src.spectrum.hodge import hodge_spectrum
from src.spectrum.milnor import milnor_number
from src.spectrum.theorem import check_spectrum_vs_inner
from src.spectrum.weights import infer_weights

logging.basicConfig(
    level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)


class SpectrumRoute(Route):
    """
    Answers spectrum commands for quasi-homogeneous isolated singularities.

    Config options:
        - verbose_logging: Log b-function progress at INFO (default: False)
    """

    name = "spectrum"
    commands = ("spectrum", "check-theorem")

    def _validate_config(self) -> None:
        self.config.setdefault("verbose_logging", False)

    def execute(self, request: Request) -> RouteResult:
        """
        Run a spectrum command.

        Raises:
            ValueError: If f is not quasi-homogeneous with an isolated singularity
            RuntimeError: If the two sides of the spectrum check disagree
        """
        if request.command == "spectrum":
            return self._spectrum(request)
        if request.command == "check-theorem":
            return self._check(request)
        raise ValueError(f"the spectrum route does not handle '{request.command}'")

    def _spectrum(self, request: Request) -> RouteResult:
        f = request.f
        weights = infer_weights(f)
        table = hodge_spectrum(f)
        mu = milnor_number(f)
        checks = [
            cross_check("symmetric about n/2", table.is_symmetric()),
            cross_check("total multiplicity is the Milnor number", table.total == mu, f"mu = {mu}"),
        ]
        result = {"spectrum": table.as_dict(), "milnor_number": mu, "weights": weights.as_dict()}
        text = [
            "spectrum: " + ", ".join(f"{alpha}" + (f" (x{m})" if m > 1 else "") for alpha, m in table.entries),
            f"milnor number: {mu}",
            "weights: " + ", ".join(f"{k}={v}" for k, v in weights.as_dict().items()),
        ]
        return RouteResult(result, text, checks)

    def _check(self, request: Request) -> RouteResult:
        alpha = request.require_alpha()
        report = check_spectrum_vs_inner(
            request.f, alpha, request.degree_bound, verbose=self.config["verbose_logging"]
        )
        if not report.equal:
            logger.error(f"Spectrum check failed at {alpha} for {request.f}")
            raise RuntimeError(
                f"spectrum multiplicity {report.spectrum_multiplicity} and inner multiplicity "
                f"{report.inner_multiplicity} differ at {alpha}"
            )
        result = {
            "alpha": str(alpha),
            "spectrum_multiplicity": report.spectrum_multiplicity,
            "inner_multiplicity": report.inner_multiplicity,
            "equal": report.equal,
            "convention": report.convention,
        }
        text = [
            f"spectrum multiplicity at {alpha}: {report.spectrum_multiplicity}",
            f"inner jumping multiplicity at {alpha}: {report.inner_multiplicity}",
            "agree",
            f"convention: {report.convention}",
        ]
        return RouteResult(result, text, [cross_check("spectrum equals inner multiplicity", True)])

    def get_metadata(self) -> Dict[str, Any]:
        return {"route": self.name, "commands": list(self.commands)}
