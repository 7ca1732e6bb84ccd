from typing import Dict, List, Tuple

from pydantic_settings import BaseSettings, SettingsConfigDict

from enums.algorithm import Algorithm


class Settings(BaseSettings):
    # =============================
    # Project settings
    # =============================
    PROJECT_NAME: str = "csc-position"
    FORMAT_TAG: str = "csc/1"

    # =============================
    # Logging settings
    # =============================
    LOG_DIR: str = "logs"
    LOG_LEVEL: str = "INFO"
    LOG_TO_FILE: bool = False
    LOG_ROTATION: str = "10 MB"

    # =============================
    # Command-line settings
    # =============================
    DESCRIPTION: str = (
        "Decide centrally symmetric convex position of planar point sets"
    )
    DEFAULT_ALGORITHM: str = Algorithm.TALLEST

    # =============================
    # Nine-gon settings
    # =============================
    NINEGON_SCALE: str = "93/100"
    NINEGON_DIGITS: int = 12
    # Published centers for the two deletion types, keyed by the deleted label
    NINEGON_WITNESSES: Dict[str, Tuple[str, str]] = {
        "a1": ("1/25", "0"),
        "b2": ("1/50", "0"),
    }

    # =============================
    # Parallelogram check settings
    # =============================
    PARALLELOGRAM_SAMPLES: int = 50
    PARALLELOGRAM_SEED: int = 0

    # =============================
    # Search settings
    # =============================
    SEARCH_TRIALS: int = 100
    SEARCH_SEED: int = 0
    SEARCH_JOBS: int = 1
    SEARCH_MAGNITUDE: str = "1/1000"
    SEARCH_DENOMINATOR: int = 10**6
    SEARCH_SCALE: str = "93/100"
    SEARCH_DIGITS: int = 12
    SEARCH_MIN_RADIUS: str = "4/5"

    # =============================
    # Random set settings
    # =============================
    RANDOM_COORDINATE_BOUND: int = 1000
    RANDOM_DENOMINATOR_BOUND: int = 100
    RANDOM_MAX_RETRIES: int = 64

    # =============================
    # Shrinking settings
    # =============================
    SHRINK_DENOMINATORS: List[int] = [1, 2, 4, 5, 10, 20, 25, 50, 100] + [
        10**k for k in range(3, 13)
    ]

    # =============================
    # SVG settings
    # =============================
    SVG_SIZE: int = 800
    SVG_MARGIN: str = "1/10"
    SVG_DECIMALS: int = 4

    model_config = SettingsConfigDict(
        env_file=".env", case_sensitive=False, env_file_encoding="utf-8"
    )


settings = Settings()
