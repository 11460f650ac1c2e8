"""
Configuration module for the metric dimension toolkit.
Centralizes all configuration parameters in one place.
"""
import os
from pathlib import Path
from typing import Dict, Any, Optional
import json
import logging
from dotenv import load_dotenv

from .exceptions import ConfigurationError

# Load environment variables from .env file
load_dotenv()

logger = logging.getLogger(__name__)


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name, "")
    try:
        return int(value) if value.strip() else default
    except ValueError:
        return default


def _env_float(name: str, default: float) -> float:
    value = os.getenv(name, "")
    try:
        return float(value) if value.strip() else default
    except ValueError:
        return default


# Base paths
CONFIG_DIR = Path(os.getenv("METRICDIM_HOME", str(Path.home() / ".metricdim")))
LOG_DIR = CONFIG_DIR / "logs"

# Create necessary directories
CONFIG_DIR.mkdir(exist_ok=True, parents=True)
LOG_DIR.mkdir(exist_ok=True, parents=True)

# File paths
CONFIG_FILE = CONFIG_DIR / "config.json"
LOG_FILE = LOG_DIR / "metricdim.log"

# Hitting-set solver
SOLVER_CONFIG = {
    "time_limit": _env_float("METRICDIM_SOLVER_TIME_LIMIT", 0.0),  # 0 means unlimited
    "canonical_witness": os.getenv("METRICDIM_CANONICAL_WITNESS", "true").lower() == "true",
    "reduce_dominated": os.getenv("METRICDIM_REDUCE_DOMINATED", "true").lower() == "true",
    "reduction_max_constraints": _env_int("METRICDIM_REDUCTION_MAX_CONSTRAINTS", 20000),
}

# Exhaustive oracles
BRUTE_FORCE_CONFIG = {
    "max_vertices": _env_int("METRICDIM_BRUTE_FORCE_MAX_VERTICES", 16),
}

# Product evaluators
PRODUCTS_CONFIG = {
    # Graphs up to this size get every optimal edim+ witness scanned for a root
    "exhaustive_witness_max_vertices": _env_int("METRICDIM_EXHAUSTIVE_WITNESS_MAX_VERTICES", 12),
}

# Invariant sweeps
VERIFY_CONFIG = {
    "seed": _env_int("METRICDIM_VERIFY_SEED", 2020),
    "workers": _env_int("METRICDIM_WORKERS", 1),
    "fixtures_dir": os.getenv("METRICDIM_FIXTURES_DIR", ""),
}

# Output
OUTPUT_FORMATS = ("text", "json")
OUTPUT_CONFIG = {
    "format": os.getenv("METRICDIM_OUTPUT_FORMAT", "text").lower(),  # text, json
}

# Logging
LOG_CONFIG = {
    "level": os.getenv("METRICDIM_LOG_LEVEL", "INFO").upper(),
    "console_level": os.getenv("METRICDIM_CONSOLE_LOG_LEVEL", "WARNING").upper(),
}


def _default_sections() -> Dict[str, Dict[str, Any]]:
    return {
        "solver": dict(SOLVER_CONFIG),
        "brute_force": dict(BRUTE_FORCE_CONFIG),
        "products": dict(PRODUCTS_CONFIG),
        "verify": dict(VERIFY_CONFIG),
        "output": dict(OUTPUT_CONFIG),
        "log": dict(LOG_CONFIG),
    }


class Config:
    """
    Configuration manager for the toolkit.

    Only values written through ``set``/``set_section`` are stored in the JSON
    file; everything else keeps following the environment.
    """

    def __init__(self, config_file: Optional[Path] = None):
        self.config_file = config_file or CONFIG_FILE
        self._stored: Dict[str, Dict[str, Any]] = self._load_stored()
        self._config: Dict[str, Dict[str, Any]] = self._merged()

    def _load_stored(self) -> Dict[str, Dict[str, Any]]:
        """Load the stored overrides, or none if the file is missing or unreadable."""
        try:
            if not self.config_file.exists():
                return {}
            with open(self.config_file, 'r', encoding='utf-8') as f:
                stored = json.load(f)
            return {section: dict(values) for section, values in stored.items() if isinstance(values, dict)}
        except Exception as e:
            logger.warning(f"Error loading configuration from {self.config_file}: {e}")
            return {}

    def _merged(self) -> Dict[str, Dict[str, Any]]:
        config = _default_sections()
        for section, values in self._stored.items():
            config.setdefault(section, {}).update(values)
        return config

    def _save_config(self) -> bool:
        """Save the stored overrides to file."""
        try:
            with open(self.config_file, 'w', encoding='utf-8') as f:
                json.dump(self._stored, f, indent=2)
            return True
        except Exception as e:
            logger.warning(f"Error saving configuration: {e}")
            return False

    def get(self, section: str, key: str, default: Any = None) -> Any:
        """Get a configuration value."""
        try:
            return self._config.get(section, {}).get(key, default)
        except Exception:
            return default

    def set(self, section: str, key: str, value: Any) -> bool:
        """Set a configuration value and save to file."""
        self._stored.setdefault(section, {})[key] = value
        self._config.setdefault(section, {})[key] = value
        return self._save_config()

    def get_section(self, section: str) -> Dict[str, Any]:
        """Get an entire configuration section."""
        return self._config.get(section, {})

    def set_section(self, section: str, values: Dict[str, Any]) -> bool:
        """Set an entire configuration section and save to file."""
        self._stored[section] = dict(values)
        self._config[section] = dict(values)
        return self._save_config()

    def reset_to_default(self) -> bool:
        """Drop every stored value."""
        self._stored = {}
        self._config = _default_sections()
        return self._save_config()

    def solver_time_limit(self) -> Optional[float]:
        """
        Solver budget in seconds, or None when unlimited.

        Raises:
            ConfigurationError: if the stored value is not a non-negative number.
        """
        value = self.get("solver", "time_limit", 0.0)
        try:
            limit = float(value or 0.0)
        except (TypeError, ValueError):
            raise ConfigurationError(f"solver.time_limit must be a number of seconds, got {value!r}")
        if limit < 0:
            raise ConfigurationError(f"solver.time_limit must not be negative, got {value!r}")
        return limit if limit > 0 else None

    def output_format(self) -> str:
        """Configured output format, one of OUTPUT_FORMATS."""
        fmt = str(self.get("output", "format", "text")).lower()
        if fmt not in OUTPUT_FORMATS:
            raise ConfigurationError(
                f"output.format must be one of {', '.join(OUTPUT_FORMATS)}, got {fmt!r}")
        return fmt

    def fixtures_dir(self) -> Optional[Path]:
        """Directory with user-supplied edge lists for figure-only graphs, if set."""
        value = self.get("verify", "fixtures_dir", "")
        return Path(value) if value else None
