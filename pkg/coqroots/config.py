import argparse
import logging
from dataclasses import asdict, dataclass, fields, replace
from typing import Any, List, Mapping, Optional

from dynaconf import Dynaconf, ValidationError, Validator, inspect_settings

from .constants import (
    DEFAULT_MAX_DEGREE,
    DEFAULT_SEED,
    DEFAULT_WORKERS,
    EPS_CLUSTER,
    EPS_CLUSTER_ROOT,
    EPS_CONSISTENCY,
    EPS_LINEAR,
    EPS_MULTIPLICITY,
    EPS_POLY,
    EPS_RESIDUAL,
    EPS_SINGULAR,
    EPS_TYPE,
    EPS_ZERO_B,
    OUTPUT_FORMATS,
    REFERENCE_TOLERANCE,
)

COQROOTS_CONFIG_FILE = "coqroots_settings.toml"


@dataclass(frozen=True)
class Tolerances:
    """
    Every numeric threshold used to take a discrete decision.

    Magnitude tests are relative: each consumer multiplies the field by a
    scale such as (1 + |q|^2) or (1 + |P|) before comparing.
    """

    singular: float = EPS_SINGULAR
    type_split: float = EPS_TYPE
    cluster: float = EPS_CLUSTER
    cluster_root: float = EPS_CLUSTER_ROOT
    multiplicity: float = EPS_MULTIPLICITY
    zero_b: float = EPS_ZERO_B
    linear: float = EPS_LINEAR
    consistency: float = EPS_CONSISTENCY
    residual: float = EPS_RESIDUAL
    poly: float = EPS_POLY

    def scaled(self, factor: float) -> "Tolerances":
        if factor <= 0:
            raise ValueError(f"tolerance scale must be positive, got {factor}")
        return Tolerances(**{k: v * factor for k, v in asdict(self).items()})

    def with_overrides(self, overrides: Optional[Mapping[str, Any]]) -> "Tolerances":
        if not overrides:
            return self
        known = {f.name for f in fields(self)}
        values = {}
        for key, value in overrides.items():
            name = str(key).lower()
            if name not in known:
                logging.warning(f"Ignoring unknown tolerance override: {key}")
                continue
            values[name] = float(value)
        return replace(self, **values)

    @classmethod
    def from_settings(cls, settings: Mapping[str, Any]) -> "Tolerances":
        """Build tolerances from a merged settings object (TOL and TOLERANCES keys)."""
        base = cls().with_overrides(settings.get("TOLERANCES") or {})
        tol = float(settings.get("TOL") or REFERENCE_TOLERANCE)
        return base.scaled(tol / REFERENCE_TOLERANCE)


DEFAULT_TOLERANCES = Tolerances()


class EnvironmentConfig:
    def __init__(self, parser: argparse.ArgumentParser):
        self.parser: argparse.ArgumentParser = parser
        self.dynaconf_validators: List[Validator] = [
            Validator(
                "LOG_LEVEL",
                is_type_of=str,
                is_in=["INFO", "WARN", "ERROR", "DEBUG"],
                default="INFO",
            ),
        ]
        # args that should be added to all
        self.parser.add_argument(
            "-l",
            "--log-level",
            help="Logging Level: INFO, WARN, ERROR, DEBUG",
            default=None,
        )

    def add_input_path(self, required: bool = False) -> None:
        self.parser.add_argument(
            "-i",
            "--input",
            help="JSON file with the polynomial coefficients, '-' for stdin",
            required=required,
        )
        self.dynaconf_validators.append(Validator("INPUT", is_type_of=str, default="-"))

    def add_output_format(self) -> None:
        self.parser.add_argument(
            "-f",
            "--format",
            help=f"Report format: {', '.join(OUTPUT_FORMATS)}",
            choices=OUTPUT_FORMATS,
        )
        self.dynaconf_validators.append(
            Validator("FORMAT", is_type_of=str, is_in=OUTPUT_FORMATS, default="text")
        )

    def add_tolerance(self) -> None:
        self.parser.add_argument(
            "-t",
            "--tol",
            help=f"Reference tolerance; every threshold scales with it (default {REFERENCE_TOLERANCE})",
            type=float,
        )
        self.dynaconf_validators.append(
            Validator("TOL", is_type_of=(int, float), gt=0, default=REFERENCE_TOLERANCE)
        )
        # optional per-field overrides, settings file only
        self.dynaconf_validators.append(Validator("TOLERANCES", is_type_of=dict, default={}))

    def add_verify(self) -> None:
        self.parser.add_argument(
            "--verify",
            help="Certify every reported zero and exit with status 3 on failure",
            action="store_true",
            default=None,
        )
        self.dynaconf_validators.append(Validator("VERIFY", is_type_of=bool, default=False))

    def add_seed(self) -> None:
        self.parser.add_argument(
            "--seed", help="Seed for class and line sampling", type=int
        )
        self.dynaconf_validators.append(
            Validator("SEED", is_type_of=int, default=DEFAULT_SEED)
        )

    def add_max_degree(self) -> None:
        self.parser.add_argument(
            "--max-degree", help="Refuse polynomials above this degree", type=int
        )
        self.dynaconf_validators.append(
            Validator("MAX_DEGREE", is_type_of=int, gte=1, default=DEFAULT_MAX_DEGREE)
        )

    def add_workers(self) -> None:
        self.parser.add_argument(
            "-w", "--workers", help="Threads used to solve admissible classes", type=int
        )
        self.dynaconf_validators.append(
            Validator("WORKERS", is_type_of=int, gte=1, default=DEFAULT_WORKERS)
        )

    def _get_config(self) -> Dynaconf:
        # setup config params
        config = Dynaconf(
            envvar_prefix="COQROOTS",
            settings_files=[COQROOTS_CONFIG_FILE],
            validators=self.dynaconf_validators,
        )
        # validate the configs
        try:
            config.validators.validate_all()
        except ValidationError as e:
            logging.error(e.details)
            raise e
        return config

    def get_options(self, argv) -> Dynaconf:
        # setup config based on env variables and config file
        settings = self._get_config()
        # update required setting on argparser if set in the config file
        keys = settings.keys()
        for action in self.parser._actions:
            if action.dest.upper() in keys and settings[action.dest]:
                action.required = False
        # update config with CLI args
        options, _ = self.parser.parse_known_args(argv)
        settings.update({k: v for k, v in vars(options).items() if v is not None})
        self._validate_settings(settings)
        logging.debug(inspect_settings(settings))
        return settings

    def _validate_settings(self, args) -> None:
        try:
            logging.getLogger().setLevel(args.LOG_LEVEL)
        except ValueError:
            logging.error(f"Invalid log level: {args.LOG_LEVEL}. Defaulting to DEBUG")
            logging.getLogger().setLevel("DEBUG")

        # command line values skip the dynaconf validators, check them here
        if "TOL" in args and float(args.TOL) <= 0:
            raise ValidationError(f"TOL must be positive, got {args.TOL}")
        for key in ["MAX_DEGREE", "WORKERS"]:
            if key in args and int(args[key]) < 1:
                raise ValidationError(f"{key} must be at least 1, got {args[key]}")
