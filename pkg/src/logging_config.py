"""
Logging configuration for Hyperbox.
Sends diagnostics to stderr and, optionally, to a rotating log file.
Stdout stays reserved for command output (JSON, CSV, DOT, reports).
"""

import logging
import sys
from logging.handlers import TimedRotatingFileHandler
from typing import Optional

from .config import get_config, Config


# Log format with timestamp, level, module, and message
LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

# Keep 30 days of logs
BACKUP_COUNT = 30

LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

# Third-party loggers that are noisy at DEBUG
QUIET_LOGGERS = ("graphviz",)


def resolve_level(name: Optional[str], default: str = "INFO") -> int:
    """Map a level name to its logging constant, falling back to default for unknown names."""
    name = (name or default).upper()
    if name not in LEVELS:
        name = default
    return getattr(logging, name)


def setup_logging(
    log_name: str = "hyperbox",
    config: Optional[Config] = None,
    console: bool = True,
    level: Optional[str] = None,
) -> logging.Logger:
    """
    Install the file and stderr handlers on the root logger.

    Args:
        log_name: Name for the log file (without extension).
        config: Optional config object. Uses global config if not provided.
        console: Whether to also log to stderr.
        level: Overrides config.log_level (the CLI's --log-level).

    Returns:
        Root logger configured with handlers.
    """
    config = config or get_config()
    log_level = resolve_level(level or config.log_level)
    formatter = logging.Formatter(LOG_FORMAT, DATE_FORMAT)

    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)
    root_logger.handlers.clear()

    log_file = None
    if config.log_to_file:
        config.logs_dir.mkdir(exist_ok=True)
        log_file = config.logs_dir / f"{log_name}.log"
        file_handler = TimedRotatingFileHandler(
            log_file,
            when="midnight",
            interval=1,
            backupCount=BACKUP_COUNT,
            encoding="utf-8",
        )
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)

    if console:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        root_logger.addHandler(console_handler)

    for name in QUIET_LOGGERS:
        logging.getLogger(name).setLevel(max(log_level, logging.INFO))

    root_logger.debug(f"Logging initialized: level={logging.getLevelName(log_level)}, file={log_file}")
    return root_logger
