import logging
from typing import Any, Dict, List, Optional

from src.bfun.annihilator import ann_fs
from src.bfun.bfunction import METHODS, bernstein_sato, lct_from_bfunction
from src.bfun.certificate import Certificate, find_certificate, verify_certificate
from src.bfun.filtration import v_filtration_table
from src.exactmath.polynomial import Polynomial, format_monomial
from src.newton.ideal import MultiplierTable
from src.routes.base import Request, Route, RouteResult, cross_check

logging.basicConfig(
    level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)

ANN_METHODS = ("auto", "oaku")


def _ideal_text(generators, variables) -> str:
    if generators is None:
        return "(1)"
    return "(" + ", ".join(format_monomial(variables, g) or "1" for g in generators) + ")"


class BFunctionRoute(Route):
    """
    Answers commands through Bernstein-Sato polynomials.

    Config options:
        - method: `linear` or `elimination` (default: linear)
        - ann_method: `auto` or `oaku` (default: auto)
        - max_bfunction_degree: Largest degree tried by the linear method (default: 40)
        - certificate_max_degree: Largest operator degree tried for certificates (default: 6)
        - workers: Processes computing monomial b-functions (default: 1)
        - verbose_logging: Log Gröbner statistics at INFO (default: False)
    """

    name = "bfunction"
    commands = ("bf", "verify", "lct", "mult-table", "jumping", "vfilt")

    def _validate_config(self) -> None:
        """
        Validate the configuration for the b-function route.

        Raises:
            ValueError: If a method is unknown or a bound is not positive
        """
        self.config.setdefault("method", "linear")
        self.config.setdefault("ann_method", "auto")
        self.config.setdefault("max_bfunction_degree", 40)
        self.config.setdefault("certificate_max_degree", 6)
        self.config.setdefault("workers", 1)
        self.config.setdefault("verbose_logging", False)

        if self.config["method"] not in METHODS:
            logger.error(f"Unknown b-function method: {self.config['method']}")
            raise ValueError(f"method must be one of {METHODS}, got {self.config['method']!r}")
        if self.config["ann_method"] not in ANN_METHODS:
            logger.error(f"Unknown annihilator method: {self.config['ann_method']}")
            raise ValueError(f"ann_method must be one of {ANN_METHODS}, got {self.config['ann_method']!r}")
        for key in ("max_bfunction_degree", "certificate_max_degree", "workers"):
            if self.config[key] < 1:
                raise ValueError(f"{key} must be positive, got {self.config[key]}")

    def _options(self) -> Dict[str, Any]:
        return {
            "method": self.config["method"],
            "ann_method": self.config["ann_method"],
            "max_degree": self.config["max_bfunction_degree"],
            "verbose": self.config["verbose_logging"],
        }

    def execute(self, request: Request) -> RouteResult:
        """
        Run a b-function command.

        Raises:
            ValueError: If the command is not handled here or its input is invalid
            RuntimeError: If a certificate or a b-function fails its checks
        """
        handlers = {
            "bf": self._bf,
            "verify": self._verify,
            "lct": self._lct,
            "mult-table": self._mult_table,
            "jumping": self._jumping,
            "vfilt": self._vfilt,
        }
        if request.command not in handlers:
            raise ValueError(f"the b-function route does not handle '{request.command}'")
        if request.ideal is not None:
            raise ValueError(f"{request.command} with a polynomial input does not take --monomial")
        return handlers[request.command](request)

    def _bf(self, request: Request) -> RouteResult:
        f = request.f
        b = bernstein_sato(f, request.numerator, **self._options())
        h = b.h
        certificate = find_certificate(f, b.poly, h, self.config["certificate_max_degree"])
        operator = certificate.ops[0]
        checks = [
            cross_check("roots negative rational", all(r < 0 for r, _ in b.roots), b.factored()),
            cross_check("certificate verified", verify_certificate(certificate).valid, str(operator)),
        ]
        if request.numerator is None and b.roots:
            divides = b.poly(-1) == 0
            checks.append(cross_check("(s+1) divides b", divides))
            if not divides:
                raise RuntimeError(f"(s+1) does not divide the b-function {b} of {f}")
        result = {
            "b": b.factored(),
            "expanded": str(b.poly),
            "coefficients": [str(c) for c in b.poly.coefficients],
            "roots": [{"root": str(r), "multiplicity": m} for r, m in b.roots],
            "b_z": str(b.b_z()),
            "certificate": str(operator),
        }
        if b.largest_root is not None:
            result["jump"] = str(-b.largest_root)
        text = [
            f"b(s) = {b.factored()}",
            "roots: " + ", ".join(f"{r}" + (f" (x{m})" if m > 1 else "") for r, m in b.roots),
            f"certificate: P = {operator}",
        ]
        return RouteResult(result, text, checks)

    def _verify(self, request: Request) -> RouteResult:
        if not request.functions:
            raise ValueError("verify needs at least one polynomial -f")
        if request.b is None:
            raise ValueError("verify needs a b-function -b")
        h = request.numerator or Polynomial.constant(request.variables, 1)
        verification = verify_certificate(Certificate(request.functions, h, request.b, request.operators))
        result = {"valid": verification.valid, "residual": verification.residual_text}
        text = ["valid" if verification.valid else "invalid", f"residual: {verification.residual_text}"]
        return RouteResult(result, text)

    def _lct(self, request: Request) -> RouteResult:
        value = lct_from_bfunction(request.f, **self._options())
        return RouteResult({"lct": str(value)}, [f"lct = {value}"])

    def _table(self, request: Request) -> MultiplierTable:
        alpha_max = request.alpha if request.alpha is not None else request.alpha_max
        return v_filtration_table(
            request.f, request.degree_bound, alpha_max, self.config["workers"], **self._options()
        )

    def _mult_table(self, request: Request) -> RouteResult:
        table = self._table(request)
        if request.alpha is not None:
            generators = table.ideal_at(request.alpha)
            ideal = _ideal_text(generators, request.variables)
            result = {"alpha": str(request.alpha), "ideal": ideal, "degree_bound": request.degree_bound}
            return RouteResult(result, [f"J({request.alpha}) = {ideal}  (degree <= {request.degree_bound})"])
        rows = table.to_rows(request.variables)
        checks = [self._axiom_check(request, table)]
        text = [f"J({row['alpha']}) = ({', '.join(row['ideal'])})" for row in rows]
        text.append(f"(members up to degree {request.degree_bound})")
        return RouteResult({"table": rows, "degree_bound": request.degree_bound}, text, checks)

    def _axiom_check(self, request: Request, table: MultiplierTable) -> Dict[str, Any]:
        """f * J(alpha) lies in J(alpha + 1): each generator h of J(alpha) has alpha_(f h) > alpha + 1."""
        f = request.f
        options = self._options()
        ann = ann_fs(f, options.pop("ann_method"), options["verbose"])
        failures: List[str] = []
        for entry in table.entries:
            for g in entry.generators:
                h = Polynomial.monomial(f.variables, g) * f
                b = bernstein_sato(f, h, ann=ann, **options)
                if b.largest_root is not None and -b.largest_root <= entry.alpha + 1:
                    failures.append(f"{entry.alpha}: {format_monomial(request.variables, g) or '1'}")
        return cross_check("f * J(alpha) in J(alpha + 1)", not failures, "; ".join(failures))

    def _jumping(self, request: Request) -> RouteResult:
        table = self._table(request)
        alphas = [str(a) for a in table.alphas]
        return RouteResult(
            {"jumping_numbers": alphas, "degree_bound": request.degree_bound},
            ["jumping numbers: " + (", ".join(alphas) or "none")],
        )

    def _vfilt(self, request: Request) -> RouteResult:
        table = self._table(request)
        rows = []
        text = []
        previous: Optional[tuple] = None
        for entry in table.entries:
            at = _ideal_text(previous, request.variables)
            above = _ideal_text(entry.generators, request.variables)
            rows.append({"alpha": str(entry.alpha), "at": at, "above": above})
            text.append(f"V^{entry.alpha} = {at}, V^>{entry.alpha} = {above}")
            previous = entry.generators
        text.append(f"(members up to degree {request.degree_bound})")
        return RouteResult({"table": rows, "degree_bound": request.degree_bound}, text)

    def get_metadata(self) -> Dict[str, Any]:
        """
        Get metadata about the b-function route.

        Returns:
            Dict[str, Any]: Dictionary containing metadata about the route
        """
        return {
            "route": self.name,
            "commands": list(self.commands),
            "method": self.config["method"],
            "ann_method": self.config["ann_method"],
            "workers": self.config["workers"],
        }
