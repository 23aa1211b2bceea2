"""Application configuration loader."""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml
from dotenv import load_dotenv

from triangle_inscriber.errors import ConfigError


@dataclass
class SolverConfig:
    grid_n: int = 64
    diag_exclusion: float = 1e-3
    newton_tol: float = 1e-12
    newton_max_iter: int = 50
    dedup_tol: float = 1e-4
    residual_accept: float = 1e-8
    max_candidates: int = 200
    critical_tol: float = 1e-8
    validate_samples: int = 256
    stall_ratio: float = 1e-3
    max_halvings: int = 10

    def validate(self) -> "SolverConfig":
        """Check the invariants; returns self so calls can be chained."""
        tolerances = {
            "diag_exclusion": self.diag_exclusion,
            "newton_tol": self.newton_tol,
            "dedup_tol": self.dedup_tol,
            "residual_accept": self.residual_accept,
            "critical_tol": self.critical_tol,
            "stall_ratio": self.stall_ratio,
        }
        for name, value in tolerances.items():
            if not value > 0:
                raise ConfigError(f"{name} must be > 0, got {value}")
        if self.grid_n < 8:
            raise ConfigError(f"grid_n must be >= 8, got {self.grid_n}")
        if self.newton_max_iter < 1:
            raise ConfigError(f"newton_max_iter must be >= 1, got {self.newton_max_iter}")
        if self.max_candidates < 1:
            raise ConfigError(f"max_candidates must be >= 1, got {self.max_candidates}")
        if self.validate_samples < 16:
            raise ConfigError(f"validate_samples must be >= 16, got {self.validate_samples}")
        if self.max_halvings < 0:
            raise ConfigError(f"max_halvings must be >= 0, got {self.max_halvings}")
        return self


@dataclass
class DegreeConfig:
    perturbation: float = 1e-4
    max_retries: int = 5
    check_stability: bool = True


@dataclass
class CliConfig:
    tol: float = 1e-6
    svg_samples: int = 512
    counterexample_grid: int = 96


@dataclass
class LoggingConfig:
    level: str = "INFO"
    format: str = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"
    file: str = ""  # empty: stderr only


@dataclass
class AppConfig:
    solver: SolverConfig = field(default_factory=SolverConfig)
    degree: DegreeConfig = field(default_factory=DegreeConfig)
    cli: CliConfig = field(default_factory=CliConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)


def _find_project_root() -> Path:
    """Find project root by looking for config.yaml or pyproject.toml."""
    current = Path.cwd()
    for parent in [current, *current.parents]:
        if (parent / "config.yaml").exists() or (parent / "pyproject.toml").exists():
            return parent
    return current


def _section(data: dict[str, Any], cls: type, name: str) -> Any:
    """Build a config dataclass from a yaml section, keeping defaults for missing keys."""
    values = data.get(name) or {}
    if not isinstance(values, dict):
        raise ConfigError(f"config section '{name}' must be a mapping")
    known = {f for f in cls.__dataclass_fields__}
    unknown = set(values) - known
    if unknown:
        raise ConfigError(f"unknown keys in config section '{name}': {sorted(unknown)}")
    return cls(**values)


def load_config(path: Path | None = None) -> AppConfig:
    """Load configuration from .env and config.yaml."""
    project_root = _find_project_root()

    # Load .env file
    load_dotenv(project_root / ".env")

    config_path = path or project_root / "config.yaml"
    yaml_config: dict[str, Any] = {}
    if config_path.exists():
        with open(config_path, "r") as f:
            yaml_config = yaml.safe_load(f) or {}

    solver_config = _section(yaml_config, SolverConfig, "solver")
    degree_config = _section(yaml_config, DegreeConfig, "degree")
    cli_config = _section(yaml_config, CliConfig, "cli")
    logging_config = _section(yaml_config, LoggingConfig, "logging")

    # Environment overrides
    grid_env = os.getenv("INSCRIBER_GRID_N", "")
    if grid_env:
        solver_config.grid_n = int(grid_env)
    level_env = os.getenv("INSCRIBER_LOG_LEVEL", "")
    if level_env:
        logging_config.level = level_env.upper()

    return AppConfig(
        solver=solver_config.validate(),
        degree=degree_config,
        cli=cli_config,
        logging=logging_config,
    )
