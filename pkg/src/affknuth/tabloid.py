"""Partitions, tabloids, tableaux and the statistics defined on them.

Entries of a tabloid are residues in ``1..n``.  All order comparisons
between residues use these representatives (the "broken" order
``1 < 2 < ... < n``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Sequence

from .errors import DuplicateResidue, IncompleteTabloid, ShapeMismatch, ValidationError

__all__ = [
    "Partition",
    "Tabloid",
    "Tableau",
    "partitions",
    "charge_matching",
    "local_charge",
    "charge",
    "shape_inversions",
    "weight_inversions",
    "d_lambda",
    "column_superstandard",
    "column_superstandard_tableau",
    "reverse_row_superstandard",
    "superstandard",
]


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValidationError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValidationError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def size(self) -> int:
        return sum(self.parts)

    @cached_property
    def conjugate(self) -> tuple[int, ...]:
        if not self.parts:
            return ()
        return tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0]))

    @cached_property
    def column_sizes(self) -> tuple[int, ...]:
        """Distinct column lengths, largest first."""
        return tuple(sorted(set(self.conjugate), reverse=True))

    def blocks(self) -> list[range]:
        """Maximal runs of equal parts, as 0-based index ranges."""
        out = []
        start = 0
        for i in range(1, len(self.parts) + 1):
            if i == len(self.parts) or self.parts[i] != self.parts[start]:
                out.append(range(start, i))
                start = i
        return out

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.parts)) + ">"


def partitions(n: int, max_part: int | None = None) -> Iterable[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail

    for parts in rec(n, max_part):
        yield Partition(parts)


def _validate_rows(n: int, rows: Sequence[Sequence[int]]) -> None:
    if n < 1:
        raise ValidationError("n must be positive")
    seen = set()
    for row in rows:
        for x in row:
            if not 1 <= x <= n:
                raise ValidationError(f"entry {x} is not a residue in 1..{n}")
            if x in seen:
                raise DuplicateResidue(f"entry {x} appears twice")
            seen.add(x)
    Partition(tuple(len(r) for r in rows))


@dataclass(frozen=True)
class Tabloid:
    """Rows of residues, each row an unordered set (stored sorted)."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(sorted(int(x) for x in r)) for r in self.rows)
        _validate_rows(self.n, rows)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[Iterable[int]]) -> "Tabloid":
        return cls(n, tuple(tuple(r) for r in rows))

    @cached_property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @cached_property
    def _row_index(self) -> dict[int, int]:
        return {x: k for k, row in enumerate(self.rows) for x in row}

    def row_of(self, x: int) -> int:
        """0-based row containing residue ``x``."""
        return self._row_index[x]

    def is_complete(self) -> bool:
        return self.shape.size == self.n

    def _require_complete(self):
        if not self.is_complete():
            raise IncompleteTabloid(f"tabloid uses {self.shape.size} of {self.n} residues")

    def tau(self) -> frozenset[int]:
        """Residues ``i`` whose row lies strictly above the row of ``i+1``."""
        self._require_complete()
        n = self.n
        return frozenset(i for i in range(1, n + 1) if self.row_of(i) < self.row_of(i % n + 1))

    def exchange(self, a: int, b: int) -> "Tabloid":
        swap = {a: b, b: a}
        return Tabloid(self.n, tuple(tuple(swap.get(x, x) for x in row) for row in self.rows))

    def knuth_move(self, i: int) -> "Tabloid | None":
        """Exchange ``i`` and ``i+1`` (cyclically) if the two tau sets are
        incomparable, otherwise None."""
        self._require_complete()
        n = self.n
        a = (i - 1) % n + 1
        b = a % n + 1
        if self.row_of(a) == self.row_of(b):
            return None
        other = self.exchange(a, b)
        t0, t1 = self.tau(), other.tau()
        if t0 <= t1 or t1 <= t0:
            return None
        return other

    def knuth_neighbors(self) -> list[tuple[int, "Tabloid"]]:
        out = []
        for i in range(1, self.n + 1):
            t = self.knuth_move(i)
            if t is not None:
                out.append((i, t))
        return out

    def shifted(self, k: int = 1) -> "Tabloid":
        n = self.n
        return Tabloid(n, tuple(tuple((x + k - 1) % n + 1 for x in row) for row in self.rows))

    def inversions(self) -> int:
        """Pairs ``a < b`` with ``a`` in a strictly lower row than ``b``."""
        idx = self._row_index
        return sum(1 for a in idx for b in idx if a < b and idx[a] > idx[b])

    def to_json(self) -> dict:
        return {"shape": list(self.shape.parts), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, n: int, data: dict) -> "Tabloid":
        rows = [list(r) for r in data["rows"]]
        t = cls.from_rows(n, rows)
        if "shape" in data and list(data["shape"]) != list(t.shape.parts):
            raise ShapeMismatch(f"declared shape {data['shape']} does not match rows")
        return t

    def __str__(self) -> str:
        return "/".join("{" + ",".join(map(str, r)) + "}" for r in self.rows)


@dataclass(frozen=True)
class Tableau:
    """Like a tabloid but each row is ordered; position ``c`` of a row is
    its column."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        _validate_rows(self.n, rows)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[Iterable[int]]) -> "Tableau":
        return cls(n, tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    def column(self, c: int) -> list[int]:
        """Entries of 0-based column ``c``, top to bottom."""
        return [row[c] for row in self.rows if len(row) > c]

    def with_columns(self, columns: dict[int, Sequence[int]]) -> "Tableau":
        """Replace whole 0-based columns at once."""
        rows = [list(r) for r in self.rows]
        for c, entries in columns.items():
            for r, x in enumerate(entries):
                rows[r][c] = x
        return Tableau.from_rows(self.n, rows)

    def swap(self, cell_a: tuple[int, int], cell_b: tuple[int, int]) -> "Tableau":
        rows = [list(r) for r in self.rows]
        (ra, ca), (rb, cb) = cell_a, cell_b
        rows[ra][ca], rows[rb][cb] = rows[rb][cb], rows[ra][ca]
        return Tableau.from_rows(self.n, rows)

    def tabloid(self) -> Tabloid:
        return Tabloid.from_rows(self.n, self.rows)

    def find(self, x: int) -> tuple[int, int]:
        for r, row in enumerate(self.rows):
            if x in row:
                return r, row.index(x)
        raise KeyError(x)

    def __str__(self) -> str:
        return "/".join("[" + ",".join(map(str, r)) + "]" for r in self.rows)


def column_superstandard_tableau(shape: Partition | Sequence[int], start: int, n: int | None = None) -> Tableau:
    """Fill columns left to right, each top to bottom, with consecutive
    residues beginning at ``start``."""
    shape = shape if isinstance(shape, Partition) else Partition(tuple(shape))
    n = shape.size if n is None else n
    rows = [[0] * p for p in shape.parts]
    x = start
    for c, height in enumerate(shape.conjugate):
        for r in range(height):
            rows[r][c] = (x - 1) % n + 1
            x += 1
    return Tableau.from_rows(n, rows)


def column_superstandard(shape, start: int, n: int | None = None) -> Tabloid:
    return column_superstandard_tableau(shape, start, n).tabloid()


def reverse_row_superstandard(shape, start: int, n: int | None = None) -> Tabloid:
    """Fill rows from the last one upward with consecutive residues."""
    shape = shape if isinstance(shape, Partition) else Partition(tuple(shape))
    n = shape.size if n is None else n
    rows: list[list[int]] = [[] for _ in shape.parts]
    x = start
    for r in reversed(range(len(shape))):
        for _ in range(shape[r]):
            rows[r].append((x - 1) % n + 1)
            x += 1
    return Tabloid.from_rows(n, rows)


def superstandard(kind: str, shape, start: int, n: int | None = None) -> Tabloid:
    if kind == "column":
        return column_superstandard(shape, start, n)
    if kind == "reverse_row":
        return reverse_row_superstandard(shape, start, n)
    raise ValidationError(f"unknown superstandard kind {kind!r}")


def charge_matching(top: Iterable[int], bottom: Iterable[int], order: Sequence[int] | None = None) -> dict[int, int]:
    """Match each top entry, in activation order, to the smallest unmatched
    bottom entry above it, wrapping to the smallest unmatched one."""
    top = sorted(top)
    free = sorted(bottom)
    if len(top) != len(free):
        raise ValidationError("charge matching needs rows of equal length")
    if order is None:
        order = top
    elif sorted(order) != top:
        raise ValidationError("activation order must list the top row")
    match = {}
    for a in order:
        pick = next((b for b in free if b > a), free[0])
        free.remove(pick)
        match[a] = pick
    return match


def local_charge(t: Tabloid, k: int, order: Sequence[int] | None = None) -> int:
    """Matched pairs between rows ``k`` and ``k+1`` (1-based) that wrap
    around.  Zero when the two rows differ in length."""
    if k < 1 or k >= len(t.rows) or len(t.rows[k - 1]) != len(t.rows[k]):
        return 0
    m = charge_matching(t.rows[k - 1], t.rows[k], order)
    return sum(1 for a, b in m.items() if a > b)


def charge(t: Tabloid) -> int:
    t._require_complete()
    return sum(k * local_charge(t, k) for k in range(1, len(t.rows)))


def shape_inversions(shape) -> int:
    parts = tuple(shape)
    return sum(parts[1::2])


def weight_inversions(shape, rho: Sequence[int]) -> int:
    parts = tuple(shape)
    if len(parts) != len(rho):
        raise ShapeMismatch("weight length differs from number of rows")
    return sum(r for p, r in zip(parts, rho) if p % 2)


def d_lambda(shape) -> int:
    shape = shape if isinstance(shape, Partition) else Partition(tuple(shape))
    return reduce(math.gcd, shape.conjugate, 0)
