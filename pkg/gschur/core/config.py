"""
Settings - gschur/core/config.py

Runtime settings for the library and the CLI, loaded from the environment
and an optional .env file.
"""

import os
from pathlib import Path
from typing import Literal, Optional

from pydantic import model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

VALID_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


def find_env_file() -> str:
    """Find .env file by checking multiple possible locations"""
    this_file_dir = Path(__file__).resolve().parent

    # Priority order
    possible_paths = [
        Path.cwd() / ".env",
        this_file_dir / ".env",
        this_file_dir.parent / ".env",
        this_file_dir.parent.parent / ".env",
    ]

    for path in possible_paths:
        if path.exists():
            return str(path)

    return ".env"


class Settings(BaseSettings):
    """Settings loaded from environment variables"""

    model_config = SettingsConfigDict(
        env_file=find_env_file(),
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )

    ENV: str = "development"

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_DIR: Optional[str] = None
    LOG_TO_FILE: bool = False

    @model_validator(mode="after")
    def normalize_log_level(self) -> "Settings":
        level = (self.LOG_LEVEL or "INFO").strip().upper()
        self.LOG_LEVEL = level if level in VALID_LOG_LEVELS else "INFO"
        return self

    # Monitoring
    SENTRY_DSN: Optional[str] = None
    SENTRY_TRACES_SAMPLE_RATE: float = 0.0

    # Data and output
    FIXTURES_DIR: Optional[str] = None
    OUTPUT_FORMAT: Literal["json", "text"] = "json"
    JSON_INDENT: int = 2

    @model_validator(mode="after")
    def resolve_fixtures_dir(self) -> "Settings":
        """Default to the fixtures/ directory shipped next to the package"""
        if not self.FIXTURES_DIR:
            self.FIXTURES_DIR = str(
                Path(__file__).resolve().parent.parent.parent / "fixtures"
            )
        return self


# Singleton instance
settings = Settings()


if __name__ == "__main__":
    print("=" * 50)
    print("CONFIG DEBUG INFO")
    print("=" * 50)
    print(f"Working directory: {os.getcwd()}")
    print(f"Resolved .env path: {find_env_file()}")
    print("-" * 50)
    print(f"ENV: {settings.ENV}")
    print(f"LOG_LEVEL: {settings.LOG_LEVEL}")
    print(f"LOG_TO_FILE: {settings.LOG_TO_FILE}")
    print(f"FIXTURES_DIR: {settings.FIXTURES_DIR}")
    print(f"SENTRY_DSN loaded: {settings.SENTRY_DSN is not None}")
    print("=" * 50)
