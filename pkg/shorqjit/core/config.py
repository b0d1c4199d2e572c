from typing import Optional

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FILE: Optional[str] = None

    # Simulador
    MAX_QUBITS: int = 20
    NORM_TOLERANCE: float = 1e-6
    BRANCH_PRUNE_THRESHOLD: float = 1e-15
    MAX_BRANCHES: int = 4096

    # Optimizador: tope del conjunto de residuos alcanzables
    REACHABLE_SET_CAP: int = 2**16

    # Driver
    DEFAULT_MAX_ATTEMPTS: int = 32
    DEFAULT_T_FACTOR: int = 2  # t = 2n

    # Benchmarks
    BENCH_WORKERS: int = 4
    BENCH_REPETITIONS: int = 3
    BUILD_PROFILE: str = "cpython"

    @field_validator("LOG_LEVEL")
    @classmethod
    def log_level_must_be_valid(cls, v: str) -> str:
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"LOG_LEVEL must be one of {valid_levels}")
        return v.upper()

    @field_validator("MAX_QUBITS", "MAX_BRANCHES", "REACHABLE_SET_CAP", "DEFAULT_MAX_ATTEMPTS",
                     "DEFAULT_T_FACTOR", "BENCH_WORKERS", "BENCH_REPETITIONS")
    @classmethod
    def must_be_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("El valor debe ser positivo")
        return v

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )


# Instancia de configuración global
settings = Settings()
