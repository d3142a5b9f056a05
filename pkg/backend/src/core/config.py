"""
Engine configuration
Settings are read from INTERSECTOR_* environment variables and an optional .env file
"""
from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


def _default_cache_dir() -> Path:
    return Path.home() / ".cache" / "intersector"


class EngineSettings(BaseSettings):
    """Runtime settings shared by the engines, the cache and the CLI"""

    model_config = SettingsConfigDict(
        env_prefix="INTERSECTOR_",
        env_file=".env",
        extra="ignore",
    )

    cache: Path = Field(default_factory=_default_cache_dir, description="Result cache directory")
    cache_enabled: bool = Field(default=True, description="Consult and update the on-disk cache")
    threads: int = Field(default=1, ge=1, description="Worker threads for enumeration-heavy engines")
    precision_bits: int = Field(default=128, ge=64, description="Mantissa bits for BigComplex evaluation")
    comparison_bits: int = Field(default=64, ge=16, description="Tolerance exponent for exact-vs-numeric checks")
    truncation_margin: int = Field(default=3, ge=1, description="Extra degree used to certify series truncation")
    certify_truncation: bool = Field(default=True, description="Recompute residues at T + margin and compare")
    tail_safety: int = Field(default=4, ge=1, description="Safety factor of the Witten tail estimate")
    witten_height: int = Field(default=200, ge=0, description="Default height cutoff for Witten sums")
    json_indent: int = Field(default=0, description="0 for compact JSON, any positive value for indented")
    log_level: str = Field(default="INFO", description="loguru level for the stderr sink")
    log_file: Optional[Path] = Field(default=None, description="Optional rotating log file")

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, value: str) -> str:
        return value.upper()


@lru_cache()
def get_settings() -> EngineSettings:
    """Process-wide settings instance"""
    return EngineSettings()
