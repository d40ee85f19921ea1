"""
Logging setup for the command-line front-end.
"""
import logging
from typing import Optional

from core.config import LoggingConfig


def configure_logging(config: LoggingConfig, level: Optional[str] = None) -> None:
    """
    Configure the root logger from the toolkit configuration.

    Args:
        config: Logging section of the toolkit configuration
        level: Optional level name overriding the configured one
    """
    logging.basicConfig(
        level=getattr(logging, (level or config.level).upper(), logging.WARNING),
        format=config.format,
        force=True,
    )
