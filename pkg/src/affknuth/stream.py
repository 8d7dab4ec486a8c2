"""Streams: translation-invariant SE chains of cells with one cell per row
class and per column class.

A stream is stored as its representatives with rows in ``1..n``, sorted by
row.  The representative with the smallest row carries label 1 in the
default proper numbering, and labels grow by the density ``m`` per period.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .errors import (
    InvariantError,
    OverlappingData,
    ShapeMismatch,
    SharedRowOrColumn,
    SizeMismatch,
    UnequalRows,
    ValidationError,
)
from .lattice import Cell, block_diagonal, residue
from .tabloid import Tabloid, local_charge

__all__ = [
    "StreamData",
    "Stream",
    "make_stream",
    "backward_offset",
    "is_concurrent",
    "concurrency_offset",
    "dominance_constant",
    "dominance_constant_by_concurrency",
    "dominance_constants",
    "symmetrized_offsets",
    "is_dominant",
    "dominant_representative",
]


@dataclass(frozen=True)
class StreamData:
    rows: frozenset[int]
    cols: frozenset[int]
    altitude: int

    def __post_init__(self):
        object.__setattr__(self, "rows", frozenset(self.rows))
        object.__setattr__(self, "cols", frozenset(self.cols))
        if len(self.rows) != len(self.cols):
            raise SizeMismatch("stream needs as many rows as columns")
        if not self.rows:
            raise SizeMismatch("stream must be nonempty")


@dataclass(frozen=True)
class Stream:
    n: int
    cells: tuple[Cell, ...]

    def __post_init__(self):
        n = self.n
        cells = []
        for r, c in self.cells:
            k = (r - 1) // n
            cells.append(Cell(r - k * n, c - k * n))
        cells.sort()
        cells = tuple(cells)
        if not cells:
            raise SizeMismatch("stream must be nonempty")
        if len({residue(c.col, n) for c in cells}) != len(cells) or len({c.row for c in cells}) != len(cells):
            raise ValidationError("stream cells must use distinct row and column classes")
        chain = list(cells) + [Cell(cells[0].row + n, cells[0].col + n)]
        if any(b.col <= a.col for a, b in zip(chain, chain[1:])):
            raise ValidationError("stream cells must form a SE chain")
        object.__setattr__(self, "cells", cells)

    @property
    def density(self) -> int:
        return len(self.cells)

    def altitude(self) -> int:
        return sum(block_diagonal(c, self.n) for c in self.cells)

    def data(self) -> StreamData:
        return StreamData(
            frozenset(c.row for c in self.cells),
            frozenset(residue(c.col, self.n) for c in self.cells),
            self.altitude(),
        )

    def cell(self, label: int, anchor: int = 0) -> Cell:
        """Cell carrying ``label`` when the first representative is numbered
        ``1 + anchor``."""
        m, n = self.density, self.n
        q, t = divmod(label - 1 - anchor, m)
        r, c = self.cells[t]
        return Cell(r + q * n, c + q * n)

    def rows_cols(self) -> tuple[list[int], list[int]]:
        return [c.row for c in self.cells], [c.col for c in self.cells]


def make_stream(rows: Iterable[int], cols: Iterable[int], r: int, n: int) -> Stream:
    """The unique stream with the given row and column classes and altitude.

    >>> make_stream({1, 3, 6}, {2, 4, 5}, 1, 6).cells
    (Cell(row=1, col=4), Cell(row=3, col=5), Cell(row=6, col=8))
    """
    a = sorted({residue(x, n) for x in rows})
    b = sorted({residue(x, n) for x in cols})
    if len(a) != len(b):
        raise SizeMismatch(f"{len(a)} rows but {len(b)} columns")
    if not a:
        raise SizeMismatch("stream must be nonempty")
    m = len(a)
    cells = []
    for i, row in enumerate(a):
        q, j = divmod(i + r, m)
        cells.append(Cell(row, b[j] + q * n))
    return Stream(n, tuple(cells))


def backward_offset(t: Stream, s: Stream) -> int:
    """Label shift ``c`` such that the backward numbering of ``t`` against
    the default numbering of ``s`` gives representative ``k`` (0-based) the
    label ``k + 1 + c``."""
    if t.n != s.n:
        raise ValidationError("streams have different moduli")
    if t.density != s.density:
        raise SizeMismatch("streams have different densities")
    td, sd = t.data(), s.data()
    if td.rows & sd.rows or td.cols & sd.cols:
        raise SharedRowOrColumn("streams share a row or column class")
    trows, tcols = t.rows_cols()
    srows, scols = s.rows_cols()
    bound = kernels.stream_bounds(trows, tcols, srows, scols, t.n)
    return min(b - (k + 1) for k, b in enumerate(bound))


def is_concurrent(t: Stream, s: Stream) -> bool:
    c = backward_offset(t, s)
    north = west = False
    for k, cell in enumerate(t.cells):
        nxt = s.cell(k + 1 + c + 1)
        north = north or cell.row < nxt.row
        west = west or cell.col < nxt.col
    return north and west


def concurrency_offset(rows: Iterable[int], cols: Iterable[int], rows2: Iterable[int], cols2: Iterable[int], n: int) -> int:
    """The unique altitude ``r`` for which ``st_r(rows2, cols2)`` is
    concurrent to ``st_0(rows, cols)``."""
    rows, cols, rows2, cols2 = set(rows), set(cols), set(rows2), set(cols2)
    if rows & rows2 or cols & cols2:
        raise OverlappingData("row or column classes overlap")
    if not (len(rows) == len(cols) == len(rows2) == len(cols2)):
        raise SizeMismatch("all four sets must have the same size")
    s = make_stream(rows, cols, 0, n)
    hits = [r for r in range(-n, n + 1) if is_concurrent(make_stream(rows2, cols2, r, n), s)]
    if len(hits) != 1:
        raise InvariantError(f"expected one concurrent altitude, found {hits}")
    return hits[0]


def _check_equal_rows(p: Tabloid, q: Tabloid, i: int) -> None:
    if p.shape != q.shape:
        raise ShapeMismatch(f"shapes differ: {p.shape} vs {q.shape}")
    if not (1 <= i < len(p.rows)) or len(p.rows[i - 1]) != len(p.rows[i]):
        raise UnequalRows(f"rows {i} and {i + 1} do not have equal length")


def dominance_constant(p: Tabloid, q: Tabloid, i: int) -> int:
    """Required lower bound on ``rho[i+1] - rho[i]`` (1-based rows ``i`` and
    ``i+1`` of equal length), from local charges."""
    _check_equal_rows(p, q, i)
    return local_charge(p, i) - local_charge(q, i)


def dominance_constant_by_concurrency(p: Tabloid, q: Tabloid, i: int) -> int:
    """Same constant, found by scanning altitudes for concurrency."""
    _check_equal_rows(p, q, i)
    return concurrency_offset(q.rows[i - 1], p.rows[i - 1], q.rows[i], p.rows[i], p.n)


def dominance_constants(p: Tabloid, q: Tabloid) -> list[int | None]:
    """``out[i]`` is the constant between 0-based rows ``i-1`` and ``i``, or
    None where the rows differ in length (and for ``i = 0``)."""
    if p.shape != q.shape:
        raise ShapeMismatch(f"shapes differ: {p.shape} vs {q.shape}")
    out: list[int | None] = [None]
    for i in range(1, len(p.rows)):
        out.append(dominance_constant(p, q, i) if len(p.rows[i - 1]) == len(p.rows[i]) else None)
    return out


def symmetrized_offsets(p: Tabloid, q: Tabloid) -> list[int]:
    r = dominance_constants(p, q)
    s = []
    for i, ri in enumerate(r):
        s.append(0 if ri is None else s[-1] + ri)
    return s


def _check_weight(p: Tabloid, q: Tabloid, rho: Sequence[int]) -> None:
    if p.shape != q.shape or len(rho) != len(p.rows):
        raise ShapeMismatch("P, Q and rho must have matching shapes")


def is_dominant(p: Tabloid, q: Tabloid, rho: Sequence[int]) -> bool:
    _check_weight(p, q, rho)
    r = dominance_constants(p, q)
    return all(ri is None or rho[i] >= rho[i - 1] + ri for i, ri in enumerate(r))


def dominant_representative(p: Tabloid, q: Tabloid, rho: Sequence[int]) -> tuple[int, ...]:
    """Sort ``rho - s`` increasingly within each run of equal row lengths,
    then add the offsets ``s`` back."""
    _check_weight(p, q, rho)
    s = symmetrized_offsets(p, q)
    x = [a - b for a, b in zip(rho, s)]
    for block in p.shape.blocks():
        x[block.start:block.stop] = sorted(x[block.start:block.stop])
    return tuple(a + b for a, b in zip(x, s))
