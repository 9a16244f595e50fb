"""
Configuration for OrientLab

Budgets, parallelism and server settings. Every field can be overridden with an
environment variable carrying the ORIENTLAB_ prefix, e.g.
ORIENTLAB_DEFAULT_BUDGET=1048576.
"""

from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application settings for OrientLab

    These settings can be overridden via environment variables.
    """

    model_config = SettingsConfigDict(
        env_prefix="ORIENTLAB_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    # Application settings
    app_name: str = "OrientLab"
    app_version: str = "1.0.0"
    debug_mode: bool = False
    log_level: str = "INFO"

    # Server settings
    host: str = "0.0.0.0"
    port: int = 8000

    # Exhaustive search
    default_budget: int = 2 ** 26  # elementary orientation checks
    workers: int = 1
    chunks: Optional[int] = None  # None = one chunk per worker

    # Exact triangle-deletion search refuses more triangles than this
    triangle_budget: int = 512

    # Isomorphism by canonical form is exhaustive over vertex permutations
    canonical_form_limit: int = 10


# Global settings instance
settings = Settings()
