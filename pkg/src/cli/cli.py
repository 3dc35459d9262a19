import argparse
import json
import logging
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import yaml

from src.exactmath.univariate import UnivariatePoly
from src.newton.ideal import MonomialIdeal
from src.parsers.polynomial import OperatorParser, PolynomialParser
from src.routes.base import COMMANDS, Request, Route
from src.routes.bfunction import BFunctionRoute
from src.routes.newton import NewtonRoute
from src.routes.spectrum import SpectrumRoute
from src.sources.corpus import CorpusSource
from src.utils.env import default_degree_bound, load_environment
from src.weyl.action import s_names

logger = logging.getLogger(__name__)

SCHEMA = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_environment()
    try:
        parser = build_parser()
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    args = parser.parse_args(argv)

    try:
        if args.command == "corpus":
            output = replay_corpus(args.path)
        else:
            routes = build_routes(args)
            request = build_request(args)
            report = run(request, routes, timing=args.timing)
            output = render(report, args.format)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as e:
        logger.exception(f"unexpected failure in {args.command}")
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    sys.stdout.write(output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bsato",
        description="Exact D-module invariants of polynomial singularities: Bernstein-Sato "
        "polynomials and their certificates, multiplier ideals, jumping numbers, log canonical "
        "thresholds, the V-filtration on functions, inner jumping multiplicities and Hodge spectra. "
        "Each computation family can be fine-tuned with a .yml config file.",
        epilog="For detailed configuration options, visit README",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("polynomial", nargs="?", help="The polynomial f")
    common.add_argument("--vars", required=True, help="Comma separated variable names, e.g. x,y")
    common.add_argument("-f", action="append", default=[], dest="functions", help="A polynomial f (repeatable)")
    common.add_argument("--monomial", help="Comma separated monomial generators of an ideal")
    common.add_argument("--h", "--numerator", dest="numerator", help="The numerator polynomial h (default: 1)")
    common.add_argument("-b", dest="bfunction", help="A b-function in s, e.g. \"(s+1)(s+1/2)\"")
    common.add_argument("-P", action="append", default=[], dest="operators", help="A certificate operator (repeatable)")
    common.add_argument("--alpha", help="A rational jump point, e.g. 5/6")
    common.add_argument("--alpha-max", default="2", help="Upper end of the jump range (default: 2)")
    common.add_argument(
        "--degree-bound",
        type=int,
        default=default_degree_bound(),
        help="Monomial truncation degree (default: 6 or BSATO_DEGREE_BOUND)",
    )
    common.add_argument("--format", choices=["text", "json"], default="text", help="Output format")
    common.add_argument("--timing", action="store_true", help="Report the computation time in json output")
    common.add_argument("--bfunction-config", type=str, help="Path to the b-function route config file")
    common.add_argument("--newton-config", type=str, help="Path to the newton route config file")
    common.add_argument("--spectrum-config", type=str, help="Path to the spectrum route config file")

    commands = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        commands.add_parser(name, parents=[common])
    corpus = commands.add_parser("corpus", help="Replay the golden corpus")
    corpus.add_argument("path", nargs="?", help="Path to a corpus file (default: bundled corpus)")
    return parser


def build_routes(args) -> Dict[str, Route]:
    configs = {}
    for name, path in (
        ("bfunction", args.bfunction_config),
        ("newton", args.newton_config),
        ("spectrum", args.spectrum_config),
    ):
        configs[name] = parse_config(Path(path), name) if path else None
    return {
        "bfunction": BFunctionRoute(configs["bfunction"]),
        "newton": NewtonRoute(configs["newton"]),
        "spectrum": SpectrumRoute(configs["spectrum"]),
    }


def parse_rational(text: str, option: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"{option} expects a rational number, got {text!r}") from None


def build_request(args) -> Request:
    """
    Parse the raw command line strings into a Request.

    Raises:
        ValueError: On a syntax error or an unknown identifier in any input
    """
    variables = [v.strip() for v in args.vars.split(",") if v.strip()]
    polynomials = PolynomialParser({"variables": variables})
    sources = ([args.polynomial] if args.polynomial else []) + list(args.functions)
    functions = tuple(polynomials.parse_all(sources))

    ideal = None
    if args.monomial:
        ideal = MonomialIdeal.from_polynomials(polynomials.parse_all(args.monomial.split(",")))
    if ideal is None and not functions:
        raise ValueError(f"{args.command} needs a polynomial or --monomial")

    numerator = polynomials.parse(args.numerator) if args.numerator else None
    b = None
    if args.bfunction:
        b_poly = PolynomialParser({"variables": ["s"]}).parse(args.bfunction)
        b = UnivariatePoly.from_polynomial(b_poly, "s")
    operators = ()
    if args.operators:
        r = max(len(functions), 1)
        params = list(s_names(r))
        if r > 1:
            params = ["s"] + params + [f"s{i}{j}" for i in range(1, r + 1) for j in range(1, r + 1) if i != j]
        ops = OperatorParser({"variables": variables, "params": params})
        operators = tuple(ops.parse_all(args.operators))

    echo: Dict[str, Any] = {"vars": variables}
    if sources:
        echo["f"] = sources
    for key, value in (
        ("monomial", args.monomial),
        ("h", args.numerator),
        ("b", args.bfunction),
        ("P", args.operators or None),
        ("alpha", args.alpha),
    ):
        if value is not None:
            echo[key] = value
    echo["degree_bound"] = args.degree_bound
    echo["alpha_max"] = args.alpha_max

    if args.degree_bound < 0:
        raise ValueError(f"--degree-bound must be non-negative, got {args.degree_bound}")
    return Request(
        command=args.command,
        variables=tuple(variables),
        functions=functions,
        ideal=ideal,
        numerator=numerator,
        b=b,
        operators=operators,
        alpha=parse_rational(args.alpha, "--alpha") if args.alpha else None,
        degree_bound=args.degree_bound,
        alpha_max=parse_rational(args.alpha_max, "--alpha-max"),
        echo=echo,
    )


def select_route(request: Request, routes: Dict[str, Route]) -> Route:
    """Monomial ideals and `inner` go to the newton route; spectra to the spectrum route."""
    if request.command in SpectrumRoute.commands:
        return routes["spectrum"]
    if request.command == "inner" or request.ideal is not None:
        return routes["newton"]
    return routes["bfunction"]


def run(request: Request, routes: Optional[Dict[str, Route]] = None, timing: bool = False) -> Dict[str, Any]:
    """
    Execute one request and assemble its report.

    Returns:
        Dict[str, Any]: The versioned report

    Raises:
        ValueError: On usage errors
        RuntimeError: On internal invariant failures, including a failed cross-check
    """
    if routes is None:
        routes = {"bfunction": BFunctionRoute(), "newton": NewtonRoute(), "spectrum": SpectrumRoute()}
    route = select_route(request, routes)
    start = time.perf_counter()
    outcome = route.execute(request)
    elapsed = (time.perf_counter() - start) * 1000
    failed = [c["name"] for c in outcome.cross_checks if not c["passed"]]
    if failed:
        raise RuntimeError(f"cross-check failed: {', '.join(failed)}")
    return {
        "schema": SCHEMA,
        "command": request.command,
        "input_echo": request.echo,
        "result": outcome.result,
        "provenance": {"route": route.name, "cross_checks": outcome.cross_checks},
        "timing_ms": round(elapsed, 3) if timing else None,
        "text": outcome.text,
    }


def render(report: Dict[str, Any], output_format: str) -> str:
    if output_format == "json":
        body = {key: value for key, value in report.items() if key != "text"}
        return json.dumps(body, indent=2, ensure_ascii=False) + "\n"
    lines: List[str] = list(report["text"])
    for check in report["provenance"]["cross_checks"]:
        lines.append(f"check: {check['name']}: {'ok' if check['passed'] else 'FAILED'}")
    return "\n".join(lines) + "\n"


def replay_corpus(path: Optional[str] = None) -> str:
    """
    Run every corpus line and compare its result with the expected values.

    Raises:
        RuntimeError: On the first mismatch or failing line
    """
    parser = build_parser()
    lines = []
    count = 0
    with CorpusSource([str(path)] if path else None) as source:
        for entry in source:
            _replay_entry(parser, entry)
            count += 1
            lines.append(f"ok {' '.join(entry['argv'])}")
    lines.append(f"{count} corpus entries passed")
    return "\n".join(lines) + "\n"


def _replay_entry(parser: argparse.ArgumentParser, entry: Dict[str, Any]) -> None:
    where = f"{entry['source']}: {' '.join(entry['argv'])}"
    args = parser.parse_args(entry["argv"])
    try:
        report = run(build_request(args), build_routes(args))
    except ValueError as e:
        raise RuntimeError(f"{where}: {e}") from None
    for key, expected in entry["expected"].items():
        actual = report["result"].get(key)
        if actual != expected:
            raise RuntimeError(f"{where}: {key} is {actual!r}, expected {expected!r}")


def parse_config(filename, config_type) -> Dict:
    with open(filename, "r", encoding="utf-8") as file:
        config = yaml.safe_load(file) or {}
    if not validate_dict(config, config_type):
        raise ValueError(f"invalid {config_type} config file: {filename}")
    return config


def validate_dict(config, config_type) -> bool:
    if not isinstance(config, dict):
        raise ValueError(f"{config_type} config must be a mapping")

    # for casting: 0 - int, 1 - string, 2 - boolean
    allowed_bfunction = {
        "method": 1,
        "ann_method": 1,
        "max_bfunction_degree": 0,
        "certificate_max_degree": 0,
        "workers": 0,
        "verbose_logging": 2,
    }
    allowed_newton = {
        "dimension_cap": 0,
        "method": 1,
        "ann_method": 1,
        "max_bfunction_degree": 0,
        "workers": 0,
        "verbose_logging": 2,
    }
    allowed_spectrum = {"verbose_logging": 2}
    match config_type:
        case "bfunction":
            allowed = allowed_bfunction
        case "newton":
            allowed = allowed_newton
        case "spectrum":
            allowed = allowed_spectrum
        case _:
            raise ValueError(f"unknown config type '{config_type}'")
    for key in config:
        if key not in allowed:
            print(f"Unknown key '{key}' in {config_type} config file", file=sys.stderr)
            return False
        if not validate_value(config[key], allowed[key]):
            print(f"Error location: {config_type} config file, key '{key}'", file=sys.stderr)
            return False
    return True


def validate_value(value, code):
    match code:
        case 0:
            if isinstance(value, int) and not isinstance(value, bool):
                return True
            print_type_error("integer")
            return False
        case 1:
            if isinstance(value, str):
                return True
            print_type_error("string")
            return False
        case 2:
            if isinstance(value, bool):
                return True
            print_type_error("bool")
            return False


def print_type_error(var_type):
    print(f"Error in argument. Expected: {var_type}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
