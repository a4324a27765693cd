"""Configuration settings for the application using pydantic-settings."""

from enum import StrEnum
from functools import cache

from pydantic import ValidationError, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from balanced_episturmian.exceptions import ConfigurationError


class OutputFormat(StrEnum):
    """Supported CLI output formats."""

    TEXT = "text"
    JSON = "json"


class LogLevel(StrEnum):
    DEBUG = "debug"
    INFO = "info"
    WARNING = "warning"
    ERROR = "error"


class Settings(BaseSettings):
    """Application settings with environment variable support."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Application settings
    app_name: str = "Balanced Episturmian"
    log_level: LogLevel = LogLevel.WARNING
    output_format: OutputFormat = OutputFormat.TEXT

    # Resource guards
    word_cap: int = 10_000_000
    hard_word_cap: int = 100_000_000

    # Witness search
    prefix_bound: int = 10_000
    witness_min_prefix: int = 64

    # Enumeration defaults for the verifier
    max_alphabet: int = 4
    max_head_len: int = 6
    max_tail_len: int = 3
    verify_workers: int = 1

    @model_validator(mode="after")
    def validate_bounds(self) -> "Settings":
        """Validate that every bound is positive and within the hard caps."""
        positive = {
            "word_cap": self.word_cap,
            "prefix_bound": self.prefix_bound,
            "witness_min_prefix": self.witness_min_prefix,
            "max_alphabet": self.max_alphabet,
            "max_tail_len": self.max_tail_len,
            "verify_workers": self.verify_workers,
        }
        for name, value in positive.items():
            if value <= 0:
                raise ValueError(f"{name.upper()} must be positive, got {value}")
        if self.max_head_len < 0:
            raise ValueError("MAX_HEAD_LEN must not be negative")
        if self.word_cap > self.hard_word_cap:
            raise ValueError(
                f"WORD_CAP ({self.word_cap:,}) exceeds HARD_WORD_CAP "
                f"({self.hard_word_cap:,})"
            )
        if self.prefix_bound > self.word_cap:
            raise ValueError("PREFIX_BOUND must not exceed WORD_CAP")
        return self


@cache
def get_settings() -> Settings:
    """Lazy singleton for application settings."""
    try:
        return Settings()
    except ValidationError as e:
        raise ConfigurationError(f"Invalid settings: {e}") from e
