"""Configuration management for disk-criterion."""

import multiprocessing
from pathlib import Path
from typing import Any

import yaml
from pydantic import Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class RenderConfig(BaseSettings):
    """SVG rendering configuration."""

    scale: int = Field(default=40, ge=4, le=400, description="Pixels per cell")
    margin: int = Field(default=1, ge=0, le=10, description="Margin in cells")
    show_labels: bool = Field(default=False)

    model_config = SettingsConfigDict(env_prefix="DISK_CRITERION_RENDER_")


class CrosscheckConfig(BaseSettings):
    """Exhaustive crosscheck configuration."""

    workers: int = Field(
        default_factory=lambda: max(1, multiprocessing.cpu_count() // 2),
        ge=1,
        description="Worker processes for enumeration",
    )
    max_cells: int = Field(default=20, ge=1, le=24)
    chunk_size: int = Field(default=4096, ge=1, description="Shapes per worker task")

    model_config = SettingsConfigDict(env_prefix="DISK_CRITERION_CROSSCHECK_")


class ParameterizeConfig(BaseSettings):
    """Boundary parameterization configuration."""

    refinement_levels: int = Field(default=1, ge=0, le=4)
    decay_low: float = Field(default=0.375, gt=0.0, lt=1.0)
    decay_high: float = Field(default=0.625, gt=0.0, lt=1.0)

    model_config = SettingsConfigDict(env_prefix="DISK_CRITERION_PARAMETERIZE_")

    @model_validator(mode="after")
    def check_decay_window(self) -> "ParameterizeConfig":
        if self.decay_low > self.decay_high:
            raise ValueError("decay_low must not exceed decay_high")
        return self


class LoggingConfig(BaseSettings):
    """Logging configuration."""

    level: str = Field(default="WARNING")
    file: Path | None = Field(default=None)

    @field_validator("level")
    @classmethod
    def validate_level(cls, v: str) -> str:
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level: {v}")
        return level

    @field_validator("file", mode="before")
    @classmethod
    def validate_file(cls, v: Any) -> Path | None:
        """Convert string to Path."""
        if isinstance(v, str):
            return Path(v)
        return v

    model_config = SettingsConfigDict(env_prefix="DISK_CRITERION_LOGGING_")


class Config(BaseSettings):
    """Main configuration."""

    render: RenderConfig = Field(default_factory=RenderConfig)
    crosscheck: CrosscheckConfig = Field(default_factory=CrosscheckConfig)
    parameterize: ParameterizeConfig = Field(default_factory=ParameterizeConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", case_sensitive=False, extra="ignore"
    )

    @classmethod
    def from_yaml(cls, yaml_path: Path) -> "Config":
        """Load configuration from YAML file."""
        if not yaml_path.exists():
            return cls()

        with open(yaml_path) as f:
            data = yaml.safe_load(f) or {}

        config_data = {
            "render": RenderConfig(**data.get("render", {})),
            "crosscheck": CrosscheckConfig(**data.get("crosscheck", {})),
            "parameterize": ParameterizeConfig(**data.get("parameterize", {})),
            "logging": LoggingConfig(**data.get("logging", {})),
        }

        return cls(**config_data)


def load_config(config_path: Path | None = None) -> Config:
    """
    Load configuration from YAML file and environment variables.

    Args:
        config_path: Path to YAML configuration file. If None, uses default.

    Returns:
        Loaded configuration.
    """
    if config_path is None:
        default_path = Path("config/default.yaml")
        if default_path.exists():
            config_path = default_path

    if config_path and config_path.exists():
        return Config.from_yaml(config_path)

    return Config()
