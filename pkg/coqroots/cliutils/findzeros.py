import argparse
import json
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, MutableMapping, Optional, Tuple

from dynaconf import ValidationError

from ..config import EnvironmentConfig, Tolerances
from ..constants import (
    COEFFICIENTS,
    DEFAULT_MAX_DEGREE,
    DEFAULT_SEED,
    DEFAULT_WORKERS,
    EXIT_CERTIFICATION_FAILED,
    EXIT_MALFORMED_INPUT,
    EXIT_OK,
    EXIT_SINGULAR_LEADING,
    OPTIONS,
    OUTPUT_FORMATS,
    REFERENCE_TOLERANCE,
    CoqRootsError,
)
from ..polynomials.cqpoly import CoqPolynomial, SingularLeadingCoefficient
from ..rootfinder.report import find_all_zeros
from ..verify.certify import certify
from .render import render_json, render_text
from .utils import configure_basic_logging, read_text

Row = Tuple[float, float, float, float]

# option name in the input document -> settings key
INPUT_OPTIONS = {"tol": "TOL", "format": "FORMAT", "verify": "VERIFY", "seed": "SEED"}


class MalformedInput(CoqRootsError):
    """
    Raised when the input document cannot be read as a polynomial.
    """

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        location = "" if line is None else f" (line {line}, column {column})"
        super().__init__(f"{message}{location}")
        self.line = line
        self.column = column


class DegreeZero(MalformedInput):
    """
    Raised when the input polynomial is constant, so there is nothing to solve.
    """

    pass


@dataclass(frozen=True)
class InputSpec:
    coefficients: Tuple[Row, ...]
    options: Dict[str, Any] = field(default_factory=dict)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def polynomial(self) -> CoqPolynomial:
        return CoqPolynomial.from_tuples(self.coefficients)


def _parse_row(index: int, row: Any) -> Row:
    where = f"{COEFFICIENTS}[{index}]"
    if not isinstance(row, list) or len(row) != 4:
        raise MalformedInput(f"{where} must be a list of 4 numbers")
    values = []
    for value in row:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise MalformedInput(f"{where} holds a non-numeric entry {value!r}")
        if not math.isfinite(value):
            raise MalformedInput(f"{where} holds a non-finite entry {value!r}")
        values.append(float(value))
    return (values[0], values[1], values[2], values[3])


def _parse_options(options: Any) -> Dict[str, Any]:
    if not isinstance(options, dict):
        raise MalformedInput(f"'{OPTIONS}' must be an object")
    unknown = set(options) - set(INPUT_OPTIONS)
    if unknown:
        raise MalformedInput(f"unknown options: {', '.join(sorted(unknown))}")
    checks = {
        "tol": lambda v: isinstance(v, (int, float)) and not isinstance(v, bool) and v > 0,
        "format": lambda v: v in OUTPUT_FORMATS,
        "verify": lambda v: isinstance(v, bool),
        "seed": lambda v: isinstance(v, int) and not isinstance(v, bool),
    }
    for key, value in options.items():
        if not checks[key](value):
            raise MalformedInput(f"invalid value {value!r} for option '{key}'")
    return dict(options)


def parse_input(text: str) -> InputSpec:
    """
    Read {"coefficients": [[q0, q1, q2, q3], ...], "options": {...}} with the
    coefficients in ascending degree.  Trailing zero coefficients are dropped.

    JSON syntax errors carry the line and column of the failure.  Shape errors
    have no text position; their message names the offending element instead,
    e.g. ``coefficients[2]`` or the option key.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"invalid JSON: {e.msg}", e.lineno, e.colno) from e
    if not isinstance(document, dict) or COEFFICIENTS not in document:
        raise MalformedInput(f"expected an object with a '{COEFFICIENTS}' list")
    rows = document[COEFFICIENTS]
    if not isinstance(rows, list):
        raise MalformedInput(f"'{COEFFICIENTS}' must be a list")
    coefficients = [_parse_row(index, row) for index, row in enumerate(rows)]
    while coefficients and not any(coefficients[-1]):
        coefficients.pop()
    if len(coefficients) < len(rows):
        logging.warning(f"dropped {len(rows) - len(coefficients)} trailing zero coefficients")
    if len(coefficients) < 2:
        raise DegreeZero("the polynomial is constant; its degree must be at least 1")
    options = _parse_options(document.get(OPTIONS, {}))
    return InputSpec(tuple(coefficients), options)


def merge_input_options(
    settings: MutableMapping[str, Any], spec: InputSpec, explicit: Iterable[str] = ()
) -> None:
    """Options in the input document override settings, but not command-line flags."""
    explicit = set(explicit)
    settings.update(
        {
            INPUT_OPTIONS[name]: value
            for name, value in spec.options.items()
            if INPUT_OPTIONS[name] not in explicit
        }
    )


def run(spec: InputSpec, settings: Mapping[str, Any]) -> Tuple[int, str]:
    """Solve, optionally certify and render; returns the exit status and the report."""
    max_degree = int(settings.get("MAX_DEGREE", DEFAULT_MAX_DEGREE))
    if spec.degree > max_degree:
        logging.error(f"parse: degree {spec.degree} exceeds the maximum degree {max_degree}")
        return EXIT_MALFORMED_INPUT, ""

    tol = Tolerances.from_settings(settings)
    try:
        report = find_all_zeros(
            spec.polynomial,
            tol=tol,
            workers=int(settings.get("WORKERS", DEFAULT_WORKERS)),
            progress=settings.get("LOG_LEVEL") == "DEBUG",
        )
    except SingularLeadingCoefficient as e:
        logging.error(f"monicize: {e}")
        return EXIT_SINGULAR_LEADING, ""

    certification = None
    if settings.get("VERIFY", False):
        certification = certify(
            report,
            tolerance=float(settings.get("TOL", REFERENCE_TOLERANCE)),
            seed=int(settings.get("SEED", DEFAULT_SEED)),
        )
        if not certification.passed:
            logging.error(f"certify: {len(certification.failures)} descriptors failed")

    if settings.get("FORMAT", "text") == "json":
        output = render_json(report, certification) + "\n"
    else:
        output = render_text(report, certification)
    if certification is not None and not certification.passed:
        return EXIT_CERTIFICATION_FAILED, output
    return EXIT_OK, output


def _explicit_keys(parser: argparse.ArgumentParser, argv: Optional[List[str]]) -> List[str]:
    options, _ = parser.parse_known_args(argv)
    return [k.upper() for k, v in vars(options).items() if v is not None]


def main(argv=None) -> int:
    configure_basic_logging()
    parser = argparse.ArgumentParser(
        prog="coqroots",
        description="Find and classify all zeros of a polynomial with coquaternion coefficients",
    )
    env_config = EnvironmentConfig(parser)
    env_config.add_input_path(required=False)
    env_config.add_output_format()
    env_config.add_tolerance()
    env_config.add_verify()
    env_config.add_seed()
    env_config.add_max_degree()
    env_config.add_workers()
    try:
        args = env_config.get_options(argv)
    except ValidationError as e:
        logging.error(f"settings: {e}")
        return EXIT_MALFORMED_INPUT

    try:
        spec = parse_input(read_text(args.INPUT))
    except OSError as e:
        logging.error(f"parse: cannot read {args.INPUT}: {e}")
        return EXIT_MALFORMED_INPUT
    except MalformedInput as e:
        logging.error(f"parse: {e}")
        return EXIT_MALFORMED_INPUT
    merge_input_options(args, spec, _explicit_keys(parser, argv))

    status, output = run(spec, args)
    print(output, end="")
    return status


if __name__ == "__main__":
    raise SystemExit(main(argv=None))
