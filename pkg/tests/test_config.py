"""Configuration loading and validation."""

import pytest

from triangle_inscriber.config import SolverConfig, load_config
from triangle_inscriber.errors import ConfigError


def test_defaults():
    cfg = SolverConfig()
    assert cfg.grid_n == 64
    assert cfg.diag_exclusion == 1e-3
    assert cfg.newton_tol == 1e-12
    assert cfg.newton_max_iter == 50
    assert cfg.dedup_tol == 1e-4
    assert cfg.residual_accept == 1e-8
    assert cfg.validate() is cfg


@pytest.mark.parametrize(
    "overrides",
    [{"grid_n": 7}, {"newton_tol": 0.0}, {"dedup_tol": -1.0}, {"max_candidates": 0}, {"max_halvings": -1}],
)
def test_invalid_solver_config(overrides):
    with pytest.raises(ConfigError):
        SolverConfig(**overrides).validate()


def test_load_config_from_yaml(tmp_path, monkeypatch):
    monkeypatch.delenv("INSCRIBER_GRID_N", raising=False)
    monkeypatch.delenv("INSCRIBER_LOG_LEVEL", raising=False)
    path = tmp_path / "config.yaml"
    path.write_text("solver:\n  grid_n: 32\ncli:\n  tol: 1.0e-4\nlogging:\n  level: DEBUG\n")
    config = load_config(path)
    assert config.solver.grid_n == 32
    assert config.solver.residual_accept == 1e-8
    assert config.cli.tol == 1e-4
    assert config.logging.level == "DEBUG"
    assert config.degree.max_retries == 5


def test_env_overrides(tmp_path, monkeypatch):
    path = tmp_path / "config.yaml"
    path.write_text("solver:\n  grid_n: 32\n")
    monkeypatch.setenv("INSCRIBER_GRID_N", "24")
    monkeypatch.setenv("INSCRIBER_LOG_LEVEL", "warning")
    config = load_config(path)
    assert config.solver.grid_n == 24
    assert config.logging.level == "WARNING"


def test_unknown_key_rejected(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("solver:\n  grid: 32\n")
    with pytest.raises(ConfigError):
        load_config(path)


def test_invalid_value_rejected(tmp_path, monkeypatch):
    monkeypatch.delenv("INSCRIBER_GRID_N", raising=False)
    path = tmp_path / "config.yaml"
    path.write_text("solver:\n  grid_n: 4\n")
    with pytest.raises(ConfigError):
        load_config(path)
