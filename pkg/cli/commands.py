"""
Command implementations shared by the argparse CLI and the MCP tools
"""

import math
from dataclasses import dataclass
from functools import wraps
from pathlib import Path
from typing import Callable, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ValidationError, field_validator

from config import DEFAULT_CURVATURE, EXIT_DEGENERATE, EXIT_INPUT, EXIT_OK, SYMBOLIC_COLUMNS
from diamond import heron_K, parse_sign, propagate_lr
from errors import ConfigMismatch, DomainError, FriezeError, ParseError
from frieze import (
    Frieze,
    FriezeKind,
    cm_frieze_from_thickened_path,
    frieze_from_path,
    frieze_from_polygon,
    frieze_lift,
    frieze_restrict,
    frieze_validate,
    render_ascii,
)
from geometry import chord_from_geodesic, geodesic_from_chord
from logger import logger
from numeric import DEFAULT_POLICY, EXACT, FLOAT, TolerancePolicy, parse_scalar, sqrt_scalar
from symbolic import laurent_verify

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

SUBCOMMANDS = (
    "polygon-to-frieze",
    "path-to-frieze",
    "thickened-to-frieze",
    "complete-quad",
    "check",
    "convert",
    "laurent",
)


def parse_window(value) -> Optional[Tuple[int, int]]:
    """'LO:HI' (or a pair) to a window tuple."""
    if value is None or isinstance(value, tuple):
        return value
    if isinstance(value, list):
        return tuple(value)
    try:
        lo, hi = str(value).split(":")
        return (int(lo), int(hi))
    except ValueError:
        raise ParseError(f"Window must look like LO:HI, got {value!r}") from None


class CommandConfig(BaseModel):
    """One CLI invocation; exactly one subcommand."""

    subcommand: Literal[SUBCOMMANDS]
    input: Optional[str] = None
    payload: Optional[str] = None
    output: Optional[str] = None
    kind: str = FriezeKind.HERONIAN.value
    window: Optional[Tuple[int, int]] = None
    sign: Optional[str] = None
    seed: Optional[int] = None
    mode: Optional[Literal["exact", "float"]] = None
    tolerance: Optional[float] = None
    render: Literal["json", "ascii"] = "json"
    radius: Optional[str] = None
    curvature: Optional[str] = None
    geodesic: bool = False
    n: int = 5
    shape: Optional[str] = None
    columns: Optional[int] = SYMBOLIC_COLUMNS
    clear: bool = True

    @field_validator("window", mode="before")
    @classmethod
    def _window(cls, value):
        # pydantic only wraps ValueError into a ValidationError
        try:
            return parse_window(value)
        except ParseError as e:
            raise ValueError(str(e)) from e

    @property
    def resolved_mode(self) -> str:
        return self.mode or EXACT

    @property
    def policy(self) -> TolerancePolicy:
        if self.tolerance is None:
            return DEFAULT_POLICY
        return TolerancePolicy.with_tolerance(self.tolerance)


@dataclass
class CommandResult:
    status: int
    output: str = ""
    error: Optional[str] = None


CommandOutput = Union[str, Tuple[str, int]]


def command(func: Callable[[CommandConfig], CommandOutput]) -> Callable[[CommandConfig], CommandResult]:
    """Run a command body, mapping library errors to exit statuses."""

    @wraps(func)
    def wrapper(config: CommandConfig) -> CommandResult:
        logger.info(f"Running {config.subcommand}")
        try:
            output = func(config)
        except FriezeError as e:
            logger.error(f"{config.subcommand} failed: {type(e).__name__}: {str(e)}")
            return CommandResult(status=e.exit_code, error=f"{type(e).__name__}: {str(e)}")
        except (ValidationError, ValueError, OSError) as e:
            logger.error(f"{config.subcommand} rejected its input: {str(e)}")
            return CommandResult(status=EXIT_INPUT, error=f"{type(e).__name__}: {str(e)}")

        output, status = output if isinstance(output, tuple) else (output, EXIT_OK)
        if config.output:
            Path(config.output).write_text(output, encoding="utf-8")
        logger.info(f"{config.subcommand} finished with status {status}")
        return CommandResult(status=status, output=output)

    return wrapper


def read_payload(config: CommandConfig) -> str:
    if config.payload is not None:
        return config.payload
    if config.input is None:
        raise ParseError("No input: give an input file or a payload")
    return Path(config.input).read_text(encoding="utf-8")


def _curvature(config: CommandConfig, payload_curvature=None, mode: str = EXACT):
    if payload_curvature is not None:
        return parse_scalar(payload_curvature, mode)
    return sphere_config(config.radius, config.curvature, mode).K


def emit_frieze(z: Frieze, config: CommandConfig) -> str:
    if config.render == "ascii":
        return render_ascii(z)
    return FriezePayload.from_frieze(z).model_dump_json(indent=2) + "\n"


# ----------------------------------------------------------------------
# Frieze construction
# ----------------------------------------------------------------------


@command
def cmd_polygon_to_frieze(config: CommandConfig) -> CommandOutput:
    mode = config.resolved_mode
    polygon = PolygonPayload.model_validate_json(read_payload(config))
    if config.radius is not None or config.curvature is not None:
        polygon = polygon.model_copy(update={"radius": config.radius, "curvature": config.curvature})
    points = polygon.to_points(mode)
    z = frieze_from_polygon(points, FriezeKind.parse(config.kind), config.window)
    return emit_frieze(z, config)


@command
def cmd_path_to_frieze(config: CommandConfig) -> CommandOutput:
    mode = config.resolved_mode
    payload = PathPayload.model_validate_json(read_payload(config))
    path = payload.to_path(mode)
    K = _curvature(config, payload.curvature, mode)
    z = frieze_from_path(path, K, window=config.window, shuffle_seed=config.seed, policy=config.policy)
    return emit_frieze(z, config)


@command
def cmd_thickened_to_frieze(config: CommandConfig) -> CommandOutput:
    mode = config.resolved_mode
    payload = ThickenedPayload.model_validate_json(read_payload(config))
    tp = payload.to_thickened(mode)
    K = _curvature(config, payload.curvature if payload.curvature is not None else payload.path.curvature, mode)
    z = cm_frieze_from_thickened_path(tp, K, window=config.window, shuffle_seed=config.seed, policy=config.policy)
    return emit_frieze(z, config)


# ----------------------------------------------------------------------
# Quadrilateral completion
# ----------------------------------------------------------------------


@command
def cmd_complete_quad(config: CommandConfig) -> CommandOutput:
    """
    Complete five measurements of a quadrilateral to f, r and s

    Geodesic inputs are converted to squared chords in the float model;
    `--geodesic` also reports f as a geodesic length.
    """
    request = QuadRequest.model_validate_json(read_payload(config))
    geodesic_in = request.measurements == "geodesic"
    if geodesic_in and config.mode == EXACT:
        raise ConfigMismatch("Geodesic measurements need float mode")
    mode = FLOAT if geodesic_in else config.resolved_mode

    sphere = sphere_config(
        request.radius if request.radius is not None else config.radius,
        request.curvature if request.curvature is not None else config.curvature,
        mode,
    )
    K = sphere.K
    R = math.sqrt(float(sphere.R2))
    if geodesic_in:
        a, b, c, d, e = (chord_from_geodesic(parse_scalar(v, FLOAT), R) for v in (request.a, request.b, request.c, request.d, request.e))
    else:
        a, b, c, d, e = (parse_scalar(v, mode) for v in (request.a, request.b, request.c, request.d, request.e))

    if request.p is not None and request.q is not None:
        p, q = parse_scalar(request.p, mode), parse_scalar(request.q, mode)
    else:
        signs = request.signs or config.sign
        if not signs or len(signs) != 2:
            raise DomainError("Give p and q, or two sign bits such as '++'")
        p = parse_sign(signs[0]) * sqrt_scalar(heron_K(b, c, e, K), "H^K(b,c,e)")
        q = parse_sign(signs[1]) * sqrt_scalar(heron_K(a, d, e, K), "H^K(a,d,e)")

    f, r, s = propagate_lr(a, b, c, d, e, p, q, K, policy=config.policy)
    geodesic = geodesic_from_chord(float(f), R) if (config.geodesic or geodesic_in) else None
    logger.info(f"Completed quadrilateral: f={f}")
    return QuadResult.build(f, r, s, p, q, geodesic).model_dump_json(indent=2) + "\n"


# ----------------------------------------------------------------------
# Checking, conversion and the denominator check
# ----------------------------------------------------------------------


@command
def cmd_check(config: CommandConfig) -> CommandOutput:
    z = FriezePayload.model_validate_json(read_payload(config)).to_frieze(config.resolved_mode)
    report = frieze_validate(z, config.policy)
    if not report.passed:
        logger.warning(f"Frieze check found {len(report.failures())} failures")
    text = ValidationPayload.from_report(report).model_dump_json(indent=2) + "\n"
    return text, (EXIT_OK if report.passed else EXIT_DEGENERATE)


@command
def cmd_convert(config: CommandConfig) -> CommandOutput:
    z = FriezePayload.model_validate_json(read_payload(config)).to_frieze(config.resolved_mode)
    if z.kind is FriezeKind.HERONIAN:
        return emit_frieze(frieze_restrict(z, config.policy), config)
    if config.sign is None:
        raise DomainError("Converting a Cayley-Menger frieze needs --sign")
    return emit_frieze(frieze_lift(z, config.sign, config.policy), config)


@command
def cmd_laurent(config: CommandConfig) -> CommandOutput:
    if config.mode == FLOAT:
        raise ConfigMismatch("The denominator check runs in exact mode only")
    K = parse_scalar(config.curvature if config.curvature is not None else DEFAULT_CURVATURE, EXACT)
    report = laurent_verify(config.n, K, config.shape, columns=config.columns, clear=config.clear)
    logger.info(f"Denominator check took {report.elapsed:.2f}s")
    text = LaurentPayload.from_report(report).model_dump_json(indent=2) + "\n"
    return text, (EXIT_OK if report.clean else EXIT_DEGENERATE)


COMMANDS = {
    "polygon-to-frieze": cmd_polygon_to_frieze,
    "path-to-frieze": cmd_path_to_frieze,
    "thickened-to-frieze": cmd_thickened_to_frieze,
    "complete-quad": cmd_complete_quad,
    "check": cmd_check,
    "convert": cmd_convert,
    "laurent": cmd_laurent,
}


def run_command(config: CommandConfig) -> CommandResult:
    return COMMANDS[config.subcommand](config)
