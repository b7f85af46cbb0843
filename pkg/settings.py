from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict


class Config(BaseSettings):
    # GUARDS
    MAX_ELEMENTS: int = 20000
    MAX_MATRIX_CELLS: int = 60_000_000
    MAX_INVOLUTION_SEARCH: int = 64

    # HOMOLOGY
    RHO_PAIR_RANGE: Literal["full", "restricted"] = "full"

    # SCAN
    SCAN_SEED: int = 20240229
    SCAN_TRIALS: int = 2000
    SCAN_WORKERS: int = 1

    # LOGGING
    LOG_LEVEL: str = "WARNING"
    LOG_CONFIG: str = "logging.ini"

    model_config = SettingsConfigDict(env_file=".env", case_sensitive=True, extra="ignore")


settings = Config()
