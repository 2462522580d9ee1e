"""
ASCII rendering of a frieze as a horizontal strip
"""

from typing import Dict, List

from config import RENDER_CELL_WIDTH
from numeric import format_scalar

from .model import Frieze


def _cell(value, boxed: bool) -> str:
    text = format_scalar(value)
    return f"[{text}]" if boxed else text


def _header(name: str, lines: Dict[int, object]) -> str:
    cells = [f"{name}{k}={format_scalar(v)}" for k, v in sorted(lines.items())]
    return "-- " + " -- ".join(cells) + " --"


def render_ascii(z: Frieze, cell_width: int = RENDER_CELL_WIDTH) -> str:
    """
    Strip layout: one text row per distance from the lower boundary

    Entry (I, J) goes to row J - I and column I + J, so each diamond appears
    as a rhombus. Integer nodes are boxed; the NE and SE lines are printed as
    dashed headers above the strip.
    """
    cells = {idx: _cell(v, idx.is_integer_node) for idx, v in z.nodes.items()}
    # cells grow to fit the widest entry
    width = max([int(cell_width)] + [len(text) + 1 for text in cells.values()])
    half = width // 2 + width % 2
    sums = [idx.I + idx.J for idx in z.nodes]
    low = min(sums)
    span = (max(sums) - low) * half + width

    rows: Dict[int, List[str]] = {}
    for idx, text in sorted(cells.items()):
        row = rows.setdefault(idx.gap, [" "] * span)
        start = (idx.I + idx.J - low) * half
        row[start : start + width] = list(text.center(width))

    out = [
        f"{z.kind.value} frieze n={z.n} K={format_scalar(z.K)} window={list(z.window)}",
        _header("NE", z.ne_lines),
        _header("SE", z.se_lines),
    ]
    for gap in sorted(rows, reverse=True):
        out.append("".join(rows[gap]).rstrip())
    return "\n".join(out) + "\n"
