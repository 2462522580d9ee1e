"""
argparse front end
"""

import argparse
import sys
from typing import List, Optional

from pydantic import ValidationError

from config import EXIT_INPUT, EXIT_OK, SERVER_VERSION, SYMBOLIC_COLUMNS
from logger import logger

from .commands import CommandConfig, run_command


def _add_common(parser: argparse.ArgumentParser, with_input: bool = True) -> None:
    if with_input:
        parser.add_argument("input", nargs="?", help="JSON payload file")
    parser.add_argument("-o", "--output", help="Write the result here instead of stdout")
    parser.add_argument("--mode", choices=["exact", "float"])
    parser.add_argument("--tolerance", type=float, help="Float-mode epsilon")
    parser.add_argument("--radius")
    parser.add_argument("--curvature")


def _add_frieze_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--window", help="Base rows LO:HI")
    parser.add_argument("--render", choices=["json", "ascii"], default="json")
    parser.add_argument("--seed", type=int, help="Shuffle each propagation round with this seed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="friezes", description="Spherical Heronian and Cayley-Menger friezes")
    parser.add_argument("--version", action="version", version=SERVER_VERSION)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("polygon-to-frieze", help="Frieze of a spherical polygon")
    _add_common(p)
    _add_frieze_flags(p)
    p.add_argument("--kind", default="heronian")

    for name, help_text in (
        ("path-to-frieze", "Heronian frieze from a traversing path"),
        ("thickened-to-frieze", "Cayley-Menger frieze from a thickened path"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_common(p)
        _add_frieze_flags(p)

    p = sub.add_parser("complete-quad", help="Sixth distance of a spherical quadrilateral")
    _add_common(p)
    p.add_argument("--sign", help="Two sign bits for p and q, e.g. ++")
    p.add_argument("--geodesic", action="store_true", help="Also report f as a geodesic length")

    p = sub.add_parser("check", help="Validate a frieze")
    _add_common(p)

    p = sub.add_parser("convert", help="Restrict a Heronian frieze or lift a Cayley-Menger one")
    _add_common(p)
    p.add_argument("--sign", choices=["+", "-"])
    p.add_argument("--render", choices=["json", "ascii"], default="json")

    p = sub.add_parser("laurent", help="Denominator check of symbolic propagation")
    _add_common(p, with_input=False)
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--shape", help="Path steps, e.g. jjj or jij")
    p.add_argument("--columns", type=int, default=SYMBOLIC_COLUMNS, help="Rows past the path start (default: derived from n)")
    p.add_argument("--no-clear", dest="clear", action="store_false", help="Disable residual clearing")
    return parser


def config_from_args(args: argparse.Namespace) -> CommandConfig:
    values = {key: value for key, value in vars(args).items() if value is not None}
    return CommandConfig(**values)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
    except ValidationError as e:
        logger.error(f"Invalid arguments: {str(e)}")
        print(str(e), file=sys.stderr)
        return EXIT_INPUT
    result = run_command(config)
    if result.status != EXIT_OK and result.error:
        print(result.error, file=sys.stderr)
    if result.output and not config.output:
        sys.stdout.write(result.output)
    return result.status
