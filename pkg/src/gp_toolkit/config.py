"""
Configuration management for GP Toolkit
"""

import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from .constants import (
    DEFAULT_LOG_LEVEL,
    DEFAULT_OUTPUT_DIR,
    DEFAULT_REPORT_TIME_LIMIT,
    DEFAULT_SEED,
    DEFAULT_THREADS,
    DEFAULT_TORUS_TIME_LIMIT,
    LABELING_VERTEX_CAP,
    SOLVER_VERTEX_CAP,
)
from .exceptions import ConfigurationError

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Config:
    """Configuration manager for GP Toolkit"""

    def __init__(self, env_file: Optional[str] = None):
        """
        Initialize configuration

        Args:
            env_file: Optional path to .env file

        Raises:
            ConfigurationError: If a configured value is malformed
        """
        if env_file:
            load_dotenv(env_file)
        else:
            load_dotenv()

        self._log_level = os.getenv("GP_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper()
        self._threads = self._read_int("GP_THREADS", DEFAULT_THREADS)
        self._seed = self._read_int("GP_SEED", DEFAULT_SEED)
        self._time_limit = self._read_float("GP_TIME_LIMIT", None)
        self._torus_time_limit = self._read_float("GP_TORUS_TIME_LIMIT", DEFAULT_TORUS_TIME_LIMIT)
        self._labeling_cap = self._read_int("GP_LABELING_CAP", LABELING_VERTEX_CAP)
        self._solver_cap = self._read_int("GP_SOLVER_CAP", SOLVER_VERTEX_CAP)

        self._validate()

    @staticmethod
    def _read_int(key: str, default: int) -> int:
        raw = os.getenv(key)
        if raw is None or raw == "":
            return default
        try:
            return int(raw)
        except ValueError as e:
            raise ConfigurationError(f"{key} must be an integer, got {raw!r}") from e

    @staticmethod
    def _read_float(key: str, default: Optional[float]) -> Optional[float]:
        raw = os.getenv(key)
        if raw is None or raw == "":
            return default
        try:
            return float(raw)
        except ValueError as e:
            raise ConfigurationError(f"{key} must be a number, got {raw!r}") from e

    def _validate(self) -> None:
        """
        Validate configuration values

        Raises:
            ConfigurationError: If a value is out of range
        """
        if self._log_level not in _LOG_LEVELS:
            raise ConfigurationError(f"GP_LOG_LEVEL must be one of {', '.join(_LOG_LEVELS)}")
        if self._threads < 1:
            raise ConfigurationError("GP_THREADS must be at least 1")
        if self._seed < 0:
            raise ConfigurationError("GP_SEED must be non-negative")
        if self._time_limit is not None and self._time_limit <= 0:
            raise ConfigurationError("GP_TIME_LIMIT must be positive")
        if self._torus_time_limit is not None and self._torus_time_limit <= 0:
            raise ConfigurationError("GP_TORUS_TIME_LIMIT must be positive")
        if self._labeling_cap < 3 or self._solver_cap < 3:
            raise ConfigurationError("Vertex caps must be at least 3")

    def override(self, threads: Optional[int] = None, seed: Optional[int] = None) -> None:
        """
        Apply command-line overrides on top of the environment

        Raises:
            ConfigurationError: If an override is out of range
        """
        if threads is not None:
            self._threads = threads
        if seed is not None:
            self._seed = seed
        self._validate()

    @property
    def log_level(self) -> str:
        """Get log level"""
        return self._log_level

    @property
    def log_file(self) -> Optional[str]:
        """Get log file path"""
        return os.getenv("GP_LOG_FILE")

    @property
    def threads(self) -> int:
        """Get worker thread count for distance computations"""
        return self._threads

    @property
    def seed(self) -> int:
        """Get seed for randomized property trials"""
        return self._seed

    @property
    def time_limit(self) -> Optional[float]:
        """Get default solver time limit in seconds (None = unlimited)"""
        return self._time_limit

    @property
    def report_time_limit(self) -> float:
        """Get solver time limit for report rows (GP_TIME_LIMIT, else the report default)"""
        return self._time_limit if self._time_limit is not None else DEFAULT_REPORT_TIME_LIMIT

    @property
    def torus_time_limit(self) -> Optional[float]:
        """Get solver time limit used by the torus report rows"""
        return self._torus_time_limit

    @property
    def output_dir(self) -> Path:
        """Get output directory path"""
        return Path(os.getenv("GP_OUTPUT_DIR", DEFAULT_OUTPUT_DIR))

    @property
    def labeling_vertex_cap(self) -> int:
        """Get vertex cap for the O(n^3) labeling check"""
        return self._labeling_cap

    @property
    def solver_vertex_cap(self) -> int:
        """Get vertex cap for exact solving"""
        return self._solver_cap
