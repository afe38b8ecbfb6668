"""
Application configuration loaded from environment variables.
"""

from pathlib import Path

from pydantic_settings import BaseSettings
from pydantic import Field
from typing import Literal


# Base directory (repository root)
BASE_DIR = Path(__file__).parent.parent
DATA_DIR = BASE_DIR / "data"


class Settings(BaseSettings):
    """Toolkit settings from environment."""

    # Exhaustive enumeration
    max_enumeration_hexagons: int = Field(
        default=8,
        ge=1,
        description="Largest hexagon count accepted by exhaustive enumeration"
    )

    # Logging
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(default="INFO")
    debug: bool = Field(default=False)

    class Config:
        env_prefix = "POLARITY_"
        env_file = ".env"
        env_file_encoding = "utf-8"
        extra = "ignore"


# Cycle lengths the closed formula looks at
CYCLE_LENGTHS = (3, 4, 5, 6)

# Distance counted by the polarity index
POLARITY_DISTANCE = 3

# Hexagons needed before a phenylene exists
MIN_PHENYLENE_HEXAGONS = 2


# Global settings instance
settings = Settings()
