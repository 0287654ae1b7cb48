import argparse

import pytest
from dynaconf import ValidationError

from coqroots.config import DEFAULT_TOLERANCES, EnvironmentConfig, Tolerances
from coqroots.constants import DEFAULT_MAX_DEGREE, DEFAULT_WORKERS, REFERENCE_TOLERANCE


class TestEnvironmentConfig:
    def _get_parser(self):
        return argparse.ArgumentParser(
            description="Test argparse parser",
        )

    def _full_config(self, parser):
        env_config = EnvironmentConfig(parser)
        env_config.add_input_path()
        env_config.add_output_format()
        env_config.add_tolerance()
        env_config.add_verify()
        env_config.add_seed()
        env_config.add_max_degree()
        env_config.add_workers()
        return env_config

    def test_default_args(self):
        parser = self._get_parser()
        env_config = EnvironmentConfig(parser)
        options = env_config.get_options([])
        assert options.LOG_LEVEL == "INFO"
        for v in ["INPUT", "FORMAT", "TOL", "VERIFY", "SEED"]:
            assert v not in options.keys()

    def test_defaults_when_added(self):
        options = self._full_config(self._get_parser()).get_options([])
        assert options.INPUT == "-"
        assert options.FORMAT == "text"
        assert options.TOL == REFERENCE_TOLERANCE
        assert options.VERIFY is False
        assert options.SEED == 0
        assert options.MAX_DEGREE == DEFAULT_MAX_DEGREE
        assert options.WORKERS == DEFAULT_WORKERS

    def test_cli_values(self):
        env_config = self._full_config(self._get_parser())
        options = env_config.get_options(
            ["-i", "poly.json", "-f", "json", "-t", "1e-6", "--verify", "--seed", "5", "-w", "2"]
        )
        assert options.INPUT == "poly.json"
        assert options.FORMAT == "json"
        assert options.TOL == 1e-6
        assert options.VERIFY is True
        assert options.SEED == 5
        assert options.WORKERS == 2
        assert options.LOG_LEVEL == "INFO"

    def test_input_required(self):
        parser = self._get_parser()
        env_config = EnvironmentConfig(parser)
        env_config.add_input_path(required=True)
        options = env_config.get_options(["-i", "poly.json"])
        assert options.INPUT == "poly.json"
        with pytest.raises(SystemExit):
            # missing input
            _ = env_config.get_options([])

    def test_invalid_values(self):
        env_config = self._full_config(self._get_parser())
        with pytest.raises(SystemExit):
            _ = env_config.get_options(["-f", "xml"])
        with pytest.raises(ValidationError):
            _ = env_config.get_options(["-t", "-1"])
        with pytest.raises(ValidationError):
            _ = env_config.get_options(["--max-degree", "0"])

    def test_environment_variables(self, monkeypatch):
        monkeypatch.setenv("COQROOTS_FORMAT", "json")
        monkeypatch.setenv("COQROOTS_SEED", "11")
        options = self._full_config(self._get_parser()).get_options([])
        assert options.FORMAT == "json"
        assert options.SEED == 11
        # the command line wins
        options = self._full_config(self._get_parser()).get_options(["-f", "text"])
        assert options.FORMAT == "text"


class TestTolerances:
    def test_defaults(self):
        assert DEFAULT_TOLERANCES.zero_b == REFERENCE_TOLERANCE
        assert Tolerances.from_settings({}) == DEFAULT_TOLERANCES

    def test_reference_scales_every_threshold(self):
        tol = Tolerances.from_settings({"TOL": 1e-6})
        assert tol.zero_b == pytest.approx(1e-6)
        assert tol.singular == pytest.approx(1e-8)
        assert tol.cluster == pytest.approx(1e-4)

    def test_overrides(self):
        tol = Tolerances.from_settings({"TOL": 1e-8, "TOLERANCES": {"LINEAR": 1e-5, "bogus": 1.0}})
        assert tol.linear == pytest.approx(1e-5)
        assert tol.zero_b == DEFAULT_TOLERANCES.zero_b
        assert DEFAULT_TOLERANCES.with_overrides(None) is DEFAULT_TOLERANCES

    def test_scale_must_be_positive(self):
        with pytest.raises(ValueError):
            DEFAULT_TOLERANCES.scaled(0.0)
