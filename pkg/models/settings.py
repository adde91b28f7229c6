"""
Runtime settings for the level zero toolkit

Values come from environment variables named LEVEL_ZERO_<KEY>, read through
a value(key, default, type) accessor; explicit overrides win over the environment.
"""
import os
import logging
from typing import Any, Dict, Optional

from models.errors import ParameterError

logger = logging.getLogger(__name__)

ENV_PREFIX = "LEVEL_ZERO_"

DEFAULTS: Dict[str, Any] = {
    "SWEEP_BOUND": 2 ** 21,
    "WORK_CAP": 2 * 10 ** 6,
    "GRID_WORKERS": 4,
    "POINT_TIMEOUT": 60.0,
    "LOG_DIR": "logs",
}


class Settings:
    """Environment-backed settings with per-instance overrides"""

    def __init__(self, environ: Optional[Dict[str, str]] = None, **overrides):
        self.environ = os.environ if environ is None else environ
        self.overrides = {key.upper(): value for key, value in overrides.items() if value is not None}

    def contains(self, key: str) -> bool:
        key = key.upper()
        return key in self.overrides or (ENV_PREFIX + key) in self.environ

    def value(self, key: str, default: Any = None, type: Any = str) -> Any:
        key = key.upper()
        if key in self.overrides:
            raw = self.overrides[key]
        elif (ENV_PREFIX + key) in self.environ:
            raw = self.environ[ENV_PREFIX + key]
        else:
            return DEFAULTS.get(key, default) if default is None else default

        try:
            return type(raw)
        except (TypeError, ValueError):
            raise ParameterError(f"{ENV_PREFIX}{key}={raw!r} is not a valid {type.__name__}")

    def _positive(self, key: str, type: Any) -> Any:
        result = self.value(key, DEFAULTS[key], type=type)
        if result <= 0:
            raise ParameterError(f"{ENV_PREFIX}{key} must be positive, got {result}")
        return result

    @property
    def sweep_bound(self) -> int:
        return self._positive("SWEEP_BOUND", int)

    @property
    def work_cap(self) -> int:
        return self._positive("WORK_CAP", int)

    @property
    def grid_workers(self) -> int:
        return self._positive("GRID_WORKERS", int)

    @property
    def point_timeout(self) -> float:
        return self._positive("POINT_TIMEOUT", float)

    @property
    def log_dir(self) -> str:
        return self.value("LOG_DIR", DEFAULTS["LOG_DIR"], type=str)


_settings = Settings()


def get_settings() -> Settings:
    return _settings


def sweep_bound(bound: Optional[int] = None) -> int:
    """Explicit bound if given, otherwise the configured one"""
    if bound is not None:
        if bound <= 0:
            raise ParameterError(f"sweep bound must be positive, got {bound}")
        return bound
    return _settings.sweep_bound
