from enum import Enum
from pathlib import Path

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class LogLevel(str, Enum):
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"


class NivenConfig(BaseSettings):
    """The configuration for this toolkit. Every value can be overridden with
    a `NIVEN_`-prefixed environment variable (or a `.env` file), e.g.
    `NIVEN_CACHE_DIR=/tmp/niven`.
    """

    model_config = SettingsConfigDict(frozen=True, env_prefix="NIVEN_")

    cache_dir: Path = Path(".niven-cache")
    log_level: LogLevel = LogLevel.WARNING

    # Resource limits.
    state_cap: int = Field(default=2**28, description="Maximum solver states per call")
    density_budget: int = Field(default=5 * 10**9, description="Cost units allowed per density scan")
    threads: int = 1

    # Re-verify every solver result (enabled by the test suite).
    check_results: bool = False

    @field_validator("state_cap", "density_budget", "threads", mode="after")
    def validate_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("Limits and worker counts must be positive")
        return v


config = NivenConfig()  # type: ignore
