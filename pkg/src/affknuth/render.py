"""Draw a window of the infinite permutation matrix as text or SVG.

Rows grow downward and columns to the right.  Balls show their label when a
numbering is given (a filled circle otherwise), stream cells show ``*`` and empty
cells ``.``.  Separators are drawn before every row and column congruent to
1 mod ``n``.
"""
from __future__ import annotations

from typing import Iterable

from .errors import ValidationError
from .lattice import Cell

__all__ = ["Viewport", "default_viewport", "parse_viewport", "collect_marks", "render_ascii", "render_svg"]

BALL = "●"
STREAM = "*"
EMPTY = "."

Viewport = tuple[int, int, int, int]  # row_lo, row_hi, col_lo, col_hi (inclusive)


def default_viewport(n: int) -> Viewport:
    return (1 - n, 2 * n, 1 - n, 2 * n)


def parse_viewport(text: str) -> Viewport:
    """``"lo,hi"`` for a square window or ``"r0,r1,c0,c1"``."""
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise ValidationError(f"bad viewport {text!r}") from exc
    if len(parts) == 2:
        parts = parts * 2
    if len(parts) != 4 or parts[0] > parts[1] or parts[2] > parts[3]:
        raise ValidationError(f"bad viewport {text!r}")
    return tuple(parts)  # type: ignore[return-value]


def _translates(cell: Cell, n: int, vp: Viewport) -> Iterable[Cell]:
    r0, r1, _, _ = vp
    k_lo = -((cell.row - r0) // n)
    k_hi = (r1 - cell.row) // n
    for k in range(k_lo, k_hi + 1):
        yield Cell(cell.row + k * n, cell.col + k * n)


def collect_marks(n: int, balls=(), numbering=None, stream=None, viewport: Viewport | None = None) -> dict[Cell, str]:
    """Map each visible cell to the text drawn there."""
    vp = default_viewport(n) if viewport is None else viewport
    r0, r1, c0, c1 = vp
    marks: dict[Cell, str] = {}
    if stream is not None:
        for cell in stream.cells:
            for c in _translates(cell, n, vp):
                if c0 <= c.col <= c1:
                    marks[c] = STREAM
    for ball in balls:
        for c in _translates(Cell(*ball), n, vp):
            if c0 <= c.col <= c1:
                marks[c] = BALL if numbering is None else str(numbering.label(c))
    return marks


def render_ascii(n: int, balls=(), numbering=None, stream=None, viewport: Viewport | None = None) -> str:
    vp = default_viewport(n) if viewport is None else viewport
    r0, r1, c0, c1 = vp
    marks = collect_marks(n, balls, numbering, stream, vp)
    width = max([1] + [len(s) for s in marks.values()])
    cols = list(range(c0, c1 + 1))

    def is_edge(x):
        return (x - 1) % n == 0

    lines = []
    for r in range(r0, r1 + 1):
        cells = []
        for c in cols:
            sep = "|" if is_edge(c) and c != c0 else ""
            cells.append(sep + marks.get(Cell(r, c), EMPTY).rjust(width))
        row = " ".join(cells)
        if is_edge(r) and r != r0:
            lines.append("".join("+" if ch == "|" else "-" for ch in row))
        lines.append(row)
    return "\n".join(lines) + "\n"


def render_svg(n: int, balls=(), numbering=None, stream=None, viewport: Viewport | None = None, cell: int = 24) -> str:
    vp = default_viewport(n) if viewport is None else viewport
    r0, r1, c0, c1 = vp
    marks = collect_marks(n, balls, numbering, stream, vp)
    w = (c1 - c0 + 1) * cell
    h = (r1 - r0 + 1) * cell
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<rect width="{w}" height="{h}" fill="white" stroke="#999"/>',
    ]
    for r in range(r0 + 1, r1 + 1):
        if (r - 1) % n == 0:
            y = (r - r0) * cell
            out.append(f'<line x1="0" y1="{y}" x2="{w}" y2="{y}" stroke="red" stroke-width="2"/>')
    for c in range(c0 + 1, c1 + 1):
        if (c - 1) % n == 0:
            x = (c - c0) * cell
            out.append(f'<line x1="{x}" y1="0" x2="{x}" y2="{h}" stroke="red" stroke-width="2"/>')
    for cl in sorted(marks):
        x = (cl.col - c0) * cell + cell // 2
        y = (cl.row - r0) * cell + cell // 2
        text = marks[cl]
        if text == STREAM:
            out.append(f'<rect x="{x - cell // 3}" y="{y - cell // 3}" width="{2 * cell // 3}" height="{2 * cell // 3}" fill="#8cf"/>')
        else:
            out.append(f'<circle cx="{x}" cy="{y}" r="{cell // 3}" fill="black"/>')
            if text != BALL:
                out.append(f'<text x="{x}" y="{y + 4}" font-size="{cell // 2}" text-anchor="middle" fill="white">{text}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
