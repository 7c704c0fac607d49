import json
import os
from pathlib import Path

from pydantic import BaseModel, Field, ValidationError

from .errors import ConfigError
from .numeric import DEFAULT_EPS

CONFIG_NAME = ".kiepert_config.json"
TOLERANCE_ENV = "KIEPERT_TOL"


class FigureDefaults(BaseModel):
    """Default SVG canvas for `figure`."""
    width: int = Field(default=800, gt=0)
    height: int = Field(default=800, gt=0)
    padding: float = Field(default=0.15, ge=0)


class KiepertConfig(BaseModel):
    """Settings loaded from JSON file."""
    tolerance: float = Field(default=DEFAULT_EPS, gt=0)
    seed: int = 12345
    trials: int = Field(default=200, ge=1)
    figure: FigureDefaults = FigureDefaults()


def load_config(config_path: str | None = None) -> KiepertConfig:
    """Load configuration from JSON file.

    If config_path is not provided, defaults to ~/.kiepert_config.json and a
    missing file means defaults; an explicitly named file must exist.
    """
    if config_path is None:
        path = Path.home() / CONFIG_NAME
        if not path.exists():
            return KiepertConfig()
    else:
        path = Path(config_path)
        if not path.exists():
            raise FileNotFoundError(f"Config file not found: {path}")

    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(f"config {path} is not valid JSON: {e}") from e
    try:
        return KiepertConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(f"invalid config {path}: {e}") from e


def resolve_tolerance(cli_tol: float | None, config: KiepertConfig) -> float:
    """--tol beats KIEPERT_TOL, which beats the config file."""
    if cli_tol is not None:
        if cli_tol <= 0:
            raise ConfigError(f"--tol must be positive, got {cli_tol}")
        return cli_tol
    raw = os.environ.get(TOLERANCE_ENV)
    if raw is not None:
        try:
            value = float(raw)
        except ValueError as e:
            raise ConfigError(f"{TOLERANCE_ENV}={raw!r} is not a number") from e
        if value <= 0:
            raise ConfigError(f"{TOLERANCE_ENV} must be positive, got {value}")
        return value
    return config.tolerance
