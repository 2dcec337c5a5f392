"""Configuration management for the Milnor degree toolkit."""

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import yaml
from dotenv import load_dotenv


@dataclass
class ComputeConfig:
    """Engine defaults."""

    default_cap: int = 6  # Magnus truncation cap when a command gives none
    strict_mu: bool = True  # mu_bar refuses non-first-nonvanishing invariants
    workers: int = 1  # Process pool size for table1 (1 = serial)
    table_limit: int = 52
    grid_r: int = 25
    grid_k: int = 25


@dataclass
class OutputConfig:
    """Report output configuration."""

    default_format: str = "text"  # "text", "csv", "json-lines"
    testdata_dir: str = "testdata"


@dataclass
class ServerConfig:
    """MCP server configuration."""

    log_level: str = "INFO"
    name: str = "milnor-degree"
    version: str = "1.0.0"


@dataclass
class Config:
    """Main configuration container."""

    compute: ComputeConfig
    output: OutputConfig
    server: ServerConfig


OUTPUT_FORMATS = ("text", "csv", "json-lines")


def _env_bool(name: str, default: bool) -> bool:
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in ("1", "true", "yes", "on")


def load_config(config_path: Optional[Path] = None) -> Config:
    """
    Load configuration from environment variables and YAML file.

    Environment variables give the base values; sections of the YAML
    file (``compute``, ``output``, ``server``) override them.

    Args:
        config_path: Path to config.yaml file. If None, looks for config.yaml in current directory.

    Returns:
        Config object with all settings.

    Raises:
        ValueError: If a setting is out of range.
    """
    load_dotenv()

    compute = ComputeConfig(
        default_cap=int(os.getenv("MILNOR_DEFAULT_CAP", "6")),
        strict_mu=_env_bool("MILNOR_STRICT_MU", True),
        workers=int(os.getenv("MILNOR_WORKERS", "1")),
        table_limit=int(os.getenv("MILNOR_TABLE_LIMIT", "52")),
        grid_r=int(os.getenv("MILNOR_GRID_R", "25")),
        grid_k=int(os.getenv("MILNOR_GRID_K", "25")),
    )

    output = OutputConfig(
        default_format=os.getenv("MILNOR_OUTPUT_FORMAT", "text"),
        testdata_dir=os.getenv("MILNOR_TESTDATA_DIR", "testdata"),
    )

    server = ServerConfig(
        log_level=os.getenv("LOG_LEVEL", "INFO"),
        name=os.getenv("SERVER_NAME", "milnor-degree"),
        version=os.getenv("SERVER_VERSION", "1.0.0"),
    )

    if config_path is None:
        config_path = Path("config.yaml")

    if config_path.exists():
        with open(config_path) as f:
            yaml_config = yaml.safe_load(f)
            if yaml_config:
                for section, target in (
                    ("compute", compute),
                    ("output", output),
                    ("server", server),
                ):
                    for key, value in (yaml_config.get(section) or {}).items():
                        if not hasattr(target, key):
                            raise ValueError(f"Unknown {section} setting: {key}")
                        setattr(target, key, value)

    if compute.default_cap < 1:
        raise ValueError(f"default_cap must be >= 1, got {compute.default_cap}")
    if compute.workers < 1:
        raise ValueError(f"workers must be >= 1, got {compute.workers}")
    if output.default_format not in OUTPUT_FORMATS:
        raise ValueError(
            f"default_format must be one of {OUTPUT_FORMATS}, got {output.default_format}"
        )

    return Config(compute=compute, output=output, server=server)
