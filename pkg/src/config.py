"""
Configuration loader for Hyperbox.
Loads tunable limits and logging settings from an optional .env file.
"""

import os
from pathlib import Path
from typing import Optional
from dataclasses import dataclass, field
from dotenv import load_dotenv


@dataclass
class Config:
    """Main configuration class for Hyperbox."""

    # Exponential construction
    size_guard: int  # Max homs G -> H whose subsets [G,H]_β may enumerate

    # Verification defaults
    default_seed: int
    default_kmax: int

    # Random corpus bounds
    corpus_size: int
    weakwalk_size: int  # Random oriented hypergraphs for the weakwalk suite
    corpus_max_vertices: int
    corpus_max_edges: int
    corpus_max_incidences: int

    # Logging
    log_level: str
    log_to_file: bool

    # Paths
    base_dir: Path = field(default_factory=lambda: Path(__file__).parent.parent)

    @property
    def logs_dir(self) -> Path:
        return self.base_dir / "logs"


def _get_optional(key: str, default: str = "") -> str:
    """Get optional environment variable with default."""
    return os.getenv(key, default)


def _get_int(key: str, default: int) -> int:
    """Get integer environment variable with default."""
    value = os.getenv(key)
    if not value:
        return default
    try:
        return int(value)
    except ValueError:
        print(f"WARNING: {key} value '{value}' is not a valid integer. Using default: {default}")
        return default


def _get_bool(key: str, default: bool) -> bool:
    value = os.getenv(key)
    if not value:
        return default
    return value.strip().lower() in ("true", "1", "yes")


def load_config(env_path: Optional[Path] = None) -> Config:
    """
    Load configuration from .env file.

    Args:
        env_path: Optional path to .env file. If not provided, looks in project root.
                  A missing file is fine; defaults and the process environment apply.

    Returns:
        Config object with all settings loaded.
    """
    base_dir = Path(__file__).parent.parent

    if env_path is None:
        env_path = base_dir / ".env"

    if env_path.exists():
        load_dotenv(env_path)

    return Config(
        size_guard=max(1, _get_int("HYPERBOX_SIZE_GUARD", 16)),  # Clamp to >= 1
        default_seed=_get_int("HYPERBOX_SEED", 0),
        default_kmax=max(0, _get_int("HYPERBOX_KMAX", 4)),
        corpus_size=max(0, _get_int("HYPERBOX_CORPUS_SIZE", 10)),
        weakwalk_size=max(0, _get_int("HYPERBOX_WEAKWALK_SIZE", 20)),
        corpus_max_vertices=max(1, _get_int("HYPERBOX_CORPUS_MAX_VERTICES", 6)),
        corpus_max_edges=max(0, _get_int("HYPERBOX_CORPUS_MAX_EDGES", 6)),
        corpus_max_incidences=max(0, _get_int("HYPERBOX_CORPUS_MAX_INCIDENCES", 12)),
        log_level=_get_optional("LOG_LEVEL", "INFO").upper(),
        log_to_file=_get_bool("HYPERBOX_LOG_FILE", True),
        base_dir=base_dir,
    )


# Singleton config instance (loaded on first access)
_config: Optional[Config] = None


def get_config() -> Config:
    """Get the global configuration instance."""
    global _config
    if _config is None:
        _config = load_config()
    return _config


def reload_config(env_path: Optional[Path] = None) -> Config:
    """Force reload of configuration."""
    global _config
    _config = load_config(env_path)
    return _config
