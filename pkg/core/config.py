"""
Configuration module for the graph coloring toolkit.
"""
import json
from dataclasses import dataclass
from pathlib import Path
from typing import ClassVar, Optional

# Repository root; config files are resolved against it, not the working directory
ROOT_DIR = Path(__file__).resolve().parent.parent
CONFIG_DIR = ROOT_DIR / "config"
DEFAULT_CONFIG_PATH = CONFIG_DIR / "toolkit_config.json"


@dataclass
class LimitsConfig:
    """Size bounds enforced by the graph operations and solvers."""
    canonical_max_n: int
    exact_max_n: int
    enumeration_max_n: int
    free_enumeration_max_n: int
    forest_max_edges: int
    class_lookup_max_n: int
    atlas_published_max_n: int
    deletion_search_max_n: int


@dataclass
class AtlasConfig:
    """Atlas table settings."""
    default_max_n: int
    default_format: str


@dataclass
class LoggingConfig:
    """Logging settings."""
    level: str
    format: str


@dataclass
class ToolkitConfig:
    """Main toolkit configuration."""
    limits: LimitsConfig
    atlas: AtlasConfig
    logging: LoggingConfig

    _instance: ClassVar[Optional["ToolkitConfig"]] = None

    @classmethod
    def load_from_file(cls, file_path: str) -> "ToolkitConfig":
        """
        Load toolkit configuration from a JSON file.

        Args:
            file_path: Path to the configuration file

        Returns:
            ToolkitConfig object with settings from the file
        """
        with open(file_path, "r") as f:
            config_data = json.load(f)

        return cls(
            limits=LimitsConfig(**config_data["limits"]),
            atlas=AtlasConfig(**config_data["atlas"]),
            logging=LoggingConfig(**config_data["logging"]),
        )

    @classmethod
    def get(cls) -> "ToolkitConfig":
        """
        Get the active configuration, loading the default file on first use.

        Returns:
            The shared ToolkitConfig instance
        """
        if cls._instance is None:
            cls._instance = cls.load_from_file(str(DEFAULT_CONFIG_PATH))
        return cls._instance

    @classmethod
    def use(cls, config: "ToolkitConfig") -> None:
        """
        Replace the active configuration.

        Args:
            config: Configuration every module should read from now on
        """
        cls._instance = config
