__all__ = [
    "settings",
    "SERVER_NAME",
    "SERVER_VERSION",
    "LOG_LEVEL",
    "DEFAULT_CURVATURE",
    "RELATIVE_EPSILON",
    "ABSOLUTE_EPSILON",
    "SYMBOLIC_MAX_TERMS",
    "SYMBOLIC_MAX_ORDER",
    "SYMBOLIC_COLUMNS",
    "RENDER_CELL_WIDTH",
    "EXIT_OK",
    "EXIT_INPUT",
    "EXIT_DEGENERATE",
    "EXIT_RESOURCE",
]

from typing import Optional

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    FRIEZE_SERVER_NAME: str = "spherical-friezes"
    FRIEZE_SERVER_VERSION: str = "v1.0.0"
    FRIEZE_LOG_LEVEL: str = "INFO"

    # Curvature of the symbolic check when none is given
    FRIEZE_DEFAULT_CURVATURE: str = "1/49"

    # Float-model comparison policy
    FRIEZE_RELATIVE_EPSILON: float = 1e-9
    FRIEZE_ABSOLUTE_EPSILON: float = 1e-12

    # Symbolic engine limits
    FRIEZE_SYMBOLIC_MAX_TERMS: int = 250000
    FRIEZE_SYMBOLIC_MAX_ORDER: int = 6
    # Rows propagated past the path start; derived from n when unset
    FRIEZE_SYMBOLIC_COLUMNS: Optional[int] = None

    FRIEZE_RENDER_CELL_WIDTH: int = 9

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = False


settings = Settings()

SERVER_NAME = settings.FRIEZE_SERVER_NAME
SERVER_VERSION = settings.FRIEZE_SERVER_VERSION
LOG_LEVEL = settings.FRIEZE_LOG_LEVEL

DEFAULT_CURVATURE = settings.FRIEZE_DEFAULT_CURVATURE
RELATIVE_EPSILON = settings.FRIEZE_RELATIVE_EPSILON
ABSOLUTE_EPSILON = settings.FRIEZE_ABSOLUTE_EPSILON

SYMBOLIC_MAX_TERMS = settings.FRIEZE_SYMBOLIC_MAX_TERMS
SYMBOLIC_MAX_ORDER = settings.FRIEZE_SYMBOLIC_MAX_ORDER
SYMBOLIC_COLUMNS = settings.FRIEZE_SYMBOLIC_COLUMNS

RENDER_CELL_WIDTH = settings.FRIEZE_RENDER_CELL_WIDTH

# CLI exit statuses
EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DEGENERATE = 3
EXIT_RESOURCE = 4
