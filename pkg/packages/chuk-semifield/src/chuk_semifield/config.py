"""Process-wide settings.

Usage:
    from chuk_semifield.config import get_settings, load_settings, set_settings

    set_settings(load_settings("settings.yaml"))
    limit = get_settings().oracle_limit
"""

from __future__ import annotations

from pathlib import Path

import yaml
from pydantic import BaseModel, ConfigDict, Field

from chuk_semifield.errors import ParameterError, SearchRefused


class SemifieldSettings(BaseModel):
    """Thresholds that decide which exhaustive checks run."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    # Field tables
    eager_table_limit: int = Field(default=2**20, ge=2)

    # Cross-check thresholds
    oracle_limit: int = Field(default=64, ge=2)
    brute_force_limit: int = Field(default=4096, ge=2)
    spot_check_samples: int = Field(default=32, ge=0)

    # Isotopy search
    isotopy_order_limit: int = Field(default=16, ge=2)
    slow_isotopy_order_limit: int = Field(default=81, ge=2)
    search_chunk: int = Field(default=4096, ge=1)
    workers: int = Field(default=1, ge=1)

    # Exhaustive work above this many field operations needs slow=True
    cost_limit: int = Field(default=10**9, ge=1)

    # Reports
    invariant_order_limit: int = Field(default=6561, ge=2)

    seed: int = 0


_settings: SemifieldSettings = SemifieldSettings()


def get_settings() -> SemifieldSettings:
    """Current settings."""
    return _settings


def set_settings(settings: SemifieldSettings) -> None:
    """Replace the process-wide settings."""
    global _settings
    _settings = settings


def reset_settings() -> None:
    """Back to defaults."""
    set_settings(SemifieldSettings())


def require_budget(cost: int, what: str, *, slow: bool = False) -> None:
    """Refuse work estimated above ``cost_limit`` field operations unless ``slow``.

    Raises:
        SearchRefused: cost exceeds the limit and slow is not set
    """
    limit = _settings.cost_limit
    if cost > limit and not slow:
        raise SearchRefused(
            f"{what} needs about {cost:.1e} field operations, above cost_limit {limit:.1e}; "
            "pass slow=True (--slow) to run it"
        )


def load_settings(path: str | Path) -> SemifieldSettings:
    """Read settings from a YAML mapping; missing keys keep their defaults."""
    text = Path(path).read_text()
    data = yaml.safe_load(text) or {}
    if not isinstance(data, dict):
        raise ParameterError(f"settings file {path} must hold a mapping, got {type(data).__name__}")
    return SemifieldSettings.model_validate(data)
