"""
Command-line surface, JSON payloads and MCP tool handlers
"""

from .payloads import (
    FriezePayload,
    LaurentPayload,
    PathPayload,
    PolygonPayload,
    QuadRequest,
    QuadResult,
    ThickenedPayload,
    ValidationPayload,
    sphere_config,
)
from .commands import (
    COMMANDS,
    SUBCOMMANDS,
    CommandConfig,
    CommandResult,
    cmd_check,
    cmd_complete_quad,
    cmd_convert,
    cmd_laurent,
    cmd_path_to_frieze,
    cmd_polygon_to_frieze,
    cmd_thickened_to_frieze,
    parse_window,
    run_command,
)
from .parser import build_parser, main

__all__ = [
    "FriezePayload",
    "LaurentPayload",
    "PathPayload",
    "PolygonPayload",
    "QuadRequest",
    "QuadResult",
    "ThickenedPayload",
    "ValidationPayload",
    "sphere_config",
    "COMMANDS",
    "SUBCOMMANDS",
    "CommandConfig",
    "CommandResult",
    "cmd_check",
    "cmd_complete_quad",
    "cmd_convert",
    "cmd_laurent",
    "cmd_path_to_frieze",
    "cmd_polygon_to_frieze",
    "cmd_thickened_to_frieze",
    "parse_window",
    "run_command",
    "build_parser",
    "main",
]
