"""Cells of the integer grid and the compass orders between them.

Rows grow downward and columns grow rightward.  The modulus ``n`` is
always passed explicitly; nothing here stores it.
"""
from __future__ import annotations

from typing import NamedTuple

__all__ = [
    "Cell",
    "residue",
    "ceil_div",
    "translate",
    "block_diagonal",
    "compare",
    "strictly_nw",
    "strictly_se",
]


class Cell(NamedTuple):
    row: int
    col: int


def residue(x: int, n: int) -> int:
    """Representative of ``x`` mod ``n`` in ``1..n``.

    >>> residue(0, 4), residue(-3, 4), residue(9, 4)
    (4, 1, 1)
    """
    return (x - 1) % n + 1


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def translate(c: Cell, k: int, n: int) -> Cell:
    """Shift ``c`` by ``k`` periods along the main diagonal."""
    return Cell(c.row + k * n, c.col + k * n)


def block_diagonal(c: Cell, n: int) -> int:
    """Index of the diagonal ``n x n`` block containing ``c``.

    >>> block_diagonal(Cell(1, 10), 7)
    1
    >>> block_diagonal(Cell(5, 1), 4)
    -1
    """
    return ceil_div(c.col, n) - ceil_div(c.row, n)


_AXES = {
    "N": (0, -1),
    "S": (0, 1),
    "W": (1, -1),
    "E": (1, 1),
}


def compare(a: Cell, b: Cell, direction: str, strict: bool = False) -> bool:
    """True when ``a`` lies ``direction`` of ``b``.

    ``direction`` is one of N, S, E, W, NE, NW, SE, SW.  Weak comparisons
    allow equality in each constrained coordinate.

    >>> compare(Cell(2, 5), Cell(2, 3), "E")
    True
    >>> compare(Cell(1, 1), Cell(3, 3), "NW", strict=True)
    True
    """
    direction = direction.upper()
    if not direction or any(d not in _AXES for d in direction):
        raise ValueError(f"unknown direction {direction!r}")
    for d in direction:
        axis, sign = _AXES[d]
        diff = (a[axis] - b[axis]) * sign
        if diff < 0 or (strict and diff == 0):
            return False
    return True


def strictly_nw(a: Cell, b: Cell) -> bool:
    return a.row < b.row and a.col < b.col


def strictly_se(a: Cell, b: Cell) -> bool:
    return a.row > b.row and a.col > b.col
