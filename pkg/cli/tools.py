"""
MCP tool handlers wrapping the CLI commands
"""

from typing import Optional

from pydantic import ValidationError

from config import EXIT_OK
from logger import logger
from server import mcp

from .commands import (
    CommandConfig,
    CommandResult,
    cmd_check,
    cmd_complete_quad,
    cmd_laurent,
    cmd_polygon_to_frieze,
)


def _reply(result: CommandResult) -> str:
    if result.status == EXIT_OK:
        return result.output
    return f"Error (exit {result.status}): {result.error or 'check failed'}\n{result.output}".rstrip()


@mcp.tool()
async def handle_polygon_to_frieze(
    polygon: str,
    kind: str = "heronian",
    window: Optional[str] = None,
    render: str = "json",
) -> str:
    """
    Build the frieze of a spherical polygon

    Args:
        polygon: Polygon JSON with "points" and a "radius" or "curvature"
        kind: "heronian" or "cayley_menger"
        window: Base rows as "LO:HI"; defaults to 0:n
        render: "json" or "ascii"

    Returns:
        Frieze JSON or ASCII strip, or an error message
    """
    try:
        config = CommandConfig(subcommand="polygon-to-frieze", payload=polygon, kind=kind, window=window, render=render)
    except ValidationError as e:
        return f"Invalid arguments: {str(e)}"
    return _reply(cmd_polygon_to_frieze(config))


@mcp.tool()
async def handle_complete_quad(request: str, geodesic: bool = False, mode: Optional[str] = None) -> str:
    """
    Complete the sixth distance of a spherical quadrilateral

    Args:
        request: JSON with a, b, c, d, e and either p, q or "signs" like "++"
        geodesic: Also report f as a geodesic length
        mode: "exact" or "float"

    Returns:
        JSON with f, r, s, p, q (and the geodesic length), or an error message
    """
    try:
        config = CommandConfig(subcommand="complete-quad", payload=request, geodesic=geodesic, mode=mode)
    except ValidationError as e:
        return f"Invalid arguments: {str(e)}"
    return _reply(cmd_complete_quad(config))


@mcp.tool()
async def handle_check_frieze(frieze: str, tolerance: Optional[float] = None) -> str:
    """
    Validate a frieze: boundary, diamonds, periodicity, glide symmetry, coherence

    Args:
        frieze: Frieze JSON as produced by polygon-to-frieze
        tolerance: Float-mode comparison epsilon

    Returns:
        Validation report JSON
    """
    try:
        config = CommandConfig(subcommand="check", payload=frieze, tolerance=tolerance)
    except ValidationError as e:
        return f"Invalid arguments: {str(e)}"
    result = cmd_check(config)
    if result.output:
        return result.output
    return _reply(result)


@mcp.tool()
async def handle_laurent_verify(n: int = 5, curvature: str = "1/49", shape: Optional[str] = None) -> str:
    """
    Check that symbolically propagated entries have atom-monomial denominators

    Args:
        n: Frieze order, 4 to 6
        curvature: Rational curvature; "0" for the Euclidean case
        shape: Path shape of "i"/"j" steps; vertical when omitted

    Returns:
        Report JSON listing every entry's status
    """
    try:
        config = CommandConfig(subcommand="laurent", n=n, curvature=curvature, shape=shape)
    except ValidationError as e:
        return f"Invalid arguments: {str(e)}"
    logger.info(f"Tool call: laurent n={n} K={curvature}")
    result = cmd_laurent(config)
    if result.output:
        return result.output
    return _reply(result)
