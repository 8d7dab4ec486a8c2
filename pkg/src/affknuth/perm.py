"""Extended affine permutations and partial permutations.

An extended affine permutation of period ``n`` is a bijection ``w`` of the
integers with ``w(i + n) = w(i) + n``.  It is stored through its window
``[w(1), ..., w(n)]``.  A partial permutation keeps only some positions.

>>> w = AffinePermutation.from_window(4, [7, 2, 4, 1])
>>> w(5), w(0)
(11, -3)
>>> w.inverse().window
(4, 2, -3, 3)
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DuplicateResidue, EmptyPermutation, UndefinedPosition, ValidationError
from .lattice import Cell, residue

__all__ = [
    "PartialPermutation",
    "AffinePermutation",
    "parse_window",
    "format_window",
    "brute_inversion_count",
]


def _check_injective(n: int, pairs: Iterable[tuple[int, int]]) -> None:
    seen_rows: set[int] = set()
    seen_cols: dict[int, int] = {}
    for i, v in pairs:
        if not 1 <= i <= n:
            raise ValidationError(f"position {i} is not a residue in 1..{n}")
        if i in seen_rows:
            raise DuplicateResidue(f"position {i} is defined twice")
        seen_rows.add(i)
        r = residue(v, n)
        if r in seen_cols:
            raise DuplicateResidue(
                f"values {seen_cols[r]} and {v} share the residue {r} mod {n}"
            )
        seen_cols[r] = v


@dataclass(frozen=True)
class PartialPermutation:
    """A partial extended affine permutation.

    ``values`` maps positions in ``1..n`` to integers.  It is stored as a
    sorted tuple of pairs so instances are hashable.
    """

    n: int
    values: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("n must be positive")
        pairs = tuple(sorted((int(i), int(v)) for i, v in self.values))
        _check_injective(self.n, pairs)
        object.__setattr__(self, "values", pairs)

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[int, int]) -> "PartialPermutation":
        return cls(n, tuple(mapping.items()))

    @classmethod
    def from_balls(cls, n: int, balls: Iterable[Cell]) -> "PartialPermutation":
        """Build from arbitrary ball representatives (any translate)."""
        pairs = []
        for r, c in balls:
            k = (r - 1) // n
            pairs.append((r - k * n, c - k * n))
        return cls(n, tuple(pairs))

    @classmethod
    def empty(cls, n: int) -> "PartialPermutation":
        return cls(n, ())

    def as_dict(self) -> dict[int, int]:
        return dict(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def is_defined(self, i: int) -> bool:
        return residue(i, self.n) in self.as_dict()

    def __call__(self, i: int) -> int:
        n = self.n
        r = residue(i, n)
        for pos, v in self.values:
            if pos == r:
                return v + (i - r)
        raise UndefinedPosition(f"w({i}) is undefined")

    def balls(self) -> list[Cell]:
        """Ball representatives with rows in ``1..n``."""
        return [Cell(i, v) for i, v in self.values]

    def rows(self) -> set[int]:
        return {i for i, _ in self.values}

    def cols(self) -> set[int]:
        return {residue(v, self.n) for _, v in self.values}

    def is_complete(self) -> bool:
        return len(self.values) == self.n

    def to_affine(self) -> "AffinePermutation":
        if not self.is_complete():
            raise UndefinedPosition("partial permutation is not total")
        return AffinePermutation(self.n, tuple(v for _, v in self.values))

    def inverse(self) -> "PartialPermutation":
        n = self.n
        pairs = []
        for i, v in self.values:
            r = residue(v, n)
            pairs.append((r, i - (v - r)))
        return PartialPermutation(n, tuple(pairs))

    def right_descents(self) -> set[int]:
        """Residues ``i`` with ``w(i) > w(i+1)``, among testable positions."""
        d = self.as_dict()
        out = set()
        for i in range(1, self.n + 1):
            j = i + 1
            if i in d and residue(j, self.n) in d and self(i) > self(j):
                out.add(i)
        return out

    def left_descents(self) -> set[int]:
        return self.inverse().right_descents()

    def inversion_count(self) -> int:
        """Translation classes of ball pairs ``(a, b)`` with ``a`` strictly NE
        of ``b``.

        For each pair of fundamental positions the admissible translations
        form an interval, so the count is closed form.
        """
        n = self.n
        total = 0
        for i, wi in self.values:
            for j, wj in self.values:
                # j + k n > i and wj + k n < wi
                k_lo = (i - j) // n + 1
                k_hi = -((wj - wi) // n) - 1
                if k_hi >= k_lo:
                    total += k_hi - k_lo + 1
        return total

    def sign(self) -> int:
        return -1 if self.inversion_count() % 2 else 1

    def knuth_move(self, i: int) -> "PartialPermutation | None":
        """Swap positions ``i`` and ``i+1`` (mod ``n``) when a Knuth witness
        exists, otherwise return None.

        A witness is a value at ``i+2`` or ``i-1`` lying strictly between
        ``w(i)`` and ``w(i+1)``.  Undefined witness positions simply do not
        witness; the two swapped positions must be defined.
        """
        n = self.n
        i = residue(i, n)
        if not (self.is_defined(i) and self.is_defined(i + 1)):
            raise UndefinedPosition(f"Knuth move at {i} needs w({i}) and w({i + 1})")
        a, b = self(i), self(i + 1)
        lo, hi = min(a, b), max(a, b)
        witness = False
        for j in (i + 2, i - 1):
            if self.is_defined(j) and lo < self(j) < hi:
                witness = True
        if not witness:
            return None
        d = self.as_dict()
        if i < n:
            d[i], d[i + 1] = d[i + 1], d[i]
        else:
            d[n], d[1] = d[1] + n, d[n] - n
        return PartialPermutation(n, tuple(d.items()))

    def __str__(self) -> str:
        d = self.as_dict()
        return "[" + ",".join(str(d[i]) if i in d else "_" for i in range(1, self.n + 1)) + "]"


@dataclass(frozen=True)
class AffinePermutation:
    """A total extended affine permutation given by its window."""

    n: int
    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(v) for v in self.window)
        if self.n < 1:
            raise ValidationError("n must be positive")
        if len(window) != self.n:
            raise ValidationError(f"window has {len(window)} entries, expected {self.n}")
        _check_injective(self.n, enumerate(window, 1))
        object.__setattr__(self, "window", window)

    @classmethod
    def from_window(cls, n: int, values: Iterable[int]) -> "AffinePermutation":
        return cls(n, tuple(values))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "AffinePermutation":
        values = parse_window(text)
        if n is not None and n != len(values):
            raise ValidationError(f"window {text!r} does not have {n} entries")
        return cls(len(values), tuple(values))

    @classmethod
    def identity(cls, n: int) -> "AffinePermutation":
        return cls(n, tuple(range(1, n + 1)))

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, self.n)
        return self.window[r] + q * self.n

    def __str__(self) -> str:
        return format_window(self.window)

    def as_partial(self) -> PartialPermutation:
        return PartialPermutation(self.n, tuple(enumerate(self.window, 1)))

    def balls(self) -> list[Cell]:
        return [Cell(i, v) for i, v in enumerate(self.window, 1)]

    def inverse(self) -> "AffinePermutation":
        return self.as_partial().inverse().to_affine()

    def shift_sum(self) -> int:
        return sum(v - i for i, v in enumerate(self.window, 1))

    def right_descents(self) -> set[int]:
        return {i for i in range(1, self.n + 1) if self(i) > self(i + 1)}

    def left_descents(self) -> set[int]:
        return self.inverse().right_descents()

    def inversion_count(self) -> int:
        return self.as_partial().inversion_count()

    def sign(self) -> int:
        return -1 if self.inversion_count() % 2 else 1

    def knuth_move(self, i: int) -> "AffinePermutation | None":
        moved = self.as_partial().knuth_move(i)
        return None if moved is None else moved.to_affine()

    def knuth_neighbors(self) -> list[tuple[int, "AffinePermutation"]]:
        out = []
        for i in range(1, self.n + 1):
            v = self.knuth_move(i)
            if v is not None:
                out.append((i, v))
        return out


_WINDOW_RE = re.compile(r"^\s*\[\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\]\s*$")


def parse_window(text: str) -> list[int]:
    """Parse ``"[v1, v2, ..., vn]"``.

    >>> parse_window("[ 1, -3,7]")
    [1, -3, 7]
    """
    if not _WINDOW_RE.match(text):
        raise ValidationError(f"not a window: {text!r}")
    body = text.strip()[1:-1].strip()
    if not body:
        raise EmptyPermutation("empty window")
    return [int(tok) for tok in body.split(",")]


def format_window(values: Iterable[int]) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


def brute_inversion_count(w: AffinePermutation | PartialPermutation) -> int:
    """Inversions by scanning pairs of positions directly.

    Independent of the closed form: for each fundamental position ``i`` walk
    every later position ``j`` in a range wide enough to contain all
    inverted partners.
    """
    if isinstance(w, AffinePermutation):
        w = w.as_partial()
    d = w.as_dict()
    if not d:
        return 0
    n = w.n
    spread = max(d.values()) - min(d.values()) + 2 * n
    count = 0
    for i in d:
        for j in range(i + 1, i + spread + n + 1):
            if residue(j, n) in d and w(j) < w(i):
                count += 1
    return count

