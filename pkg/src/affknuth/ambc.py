"""The affine matrix-ball bijection between extended affine permutations
and triples ``(P, Q, rho)``.

The forward map repeatedly peels a stream off a partial permutation: number
the balls from the southwest channel, cut the numbering into zig-zags, keep
the back corners as a stream and the outer corners as the next partial
permutation.  The backward map rebuilds each layer from its stream.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from . import kernels
from .errors import (
    DuplicateResidue,
    EmptyPermutation,
    InvariantError,
    MalformedFiber,
    ShapeMismatch,
    SharedRowOrColumn,
    ValidationError,
)
from .lattice import Cell, block_diagonal, strictly_nw
from .perm import AffinePermutation, PartialPermutation
from .stream import Stream, make_stream
from .tabloid import Tabloid

__all__ = [
    "Numbering",
    "ZigZag",
    "Triple",
    "channel_density",
    "channel_members",
    "southwest_channel",
    "channel_numbering",
    "zigzag_decomposition",
    "forward_step",
    "phi",
    "backward_step",
    "psi",
    "block_diagonal_sum",
]


def _partial(w) -> PartialPermutation:
    return w.as_partial() if isinstance(w, AffinePermutation) else w


def _lists(w: PartialPermutation) -> tuple[list[int], list[int]]:
    return [i for i, _ in w.values], [v for _, v in w.values]


@dataclass(frozen=True)
class Numbering:
    """Labels on the ball representatives of a partial permutation.

    Translating a ball by ``(n, n)`` adds ``m`` to its label.
    """

    n: int
    m: int
    balls: tuple[Cell, ...]
    labels: tuple[int, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {b.row: (b, d) for b, d in zip(self.balls, self.labels)})

    def label(self, cell: Cell) -> int:
        k = (cell.row - 1) // self.n
        ball, d = self._index[cell.row - k * self.n]
        if ball.col != cell.col - k * self.n:
            raise KeyError(cell)
        return d + k * self.m

    def shifted(self, k: int) -> "Numbering":
        return Numbering(self.n, self.m, self.balls, tuple(d + k for d in self.labels))

    def is_monotone(self) -> bool:
        n = self.n
        for a, da in zip(self.balls, self.labels):
            for b, db in zip(self.balls, self.labels):
                t = min((a.row - b.row - 1) // n, (a.col - b.col - 1) // n)
                if db + t * self.m >= da:
                    return False
        return True

    def instances(self, label: int) -> list[Cell]:
        """Ball instances carrying ``label``, sorted by row."""
        out = []
        for b, d in zip(self.balls, self.labels):
            q, r = divmod(label - d, self.m)
            if r == 0:
                out.append(Cell(b.row + q * self.n, b.col + q * self.n))
        return sorted(out)


@dataclass(frozen=True)
class ZigZag:
    label: int
    inner: tuple[Cell, ...]
    outer: tuple[Cell, ...]
    back: Cell


@dataclass(frozen=True)
class Triple:
    P: Tabloid
    Q: Tabloid
    rho: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rho", tuple(int(x) for x in self.rho))
        if self.P.n != self.Q.n:
            raise ShapeMismatch("P and Q have different moduli")
        if self.P.shape != self.Q.shape or len(self.rho) != len(self.P.rows):
            raise ShapeMismatch("P, Q and rho must have matching shapes")

    @property
    def n(self) -> int:
        return self.P.n

    @property
    def shape(self):
        return self.P.shape

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "P": [list(r) for r in self.P.rows],
            "Q": [list(r) for r in self.Q.rows],
            "rho": list(self.rho),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Triple":
        try:
            n = int(data["n"])
            p = Tabloid.from_rows(n, data["P"])
            q = Tabloid.from_rows(n, data["Q"])
            rho = data["rho"]
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed triple: {exc}") from exc
        return cls(p, q, tuple(rho))

    def __str__(self) -> str:
        return f"P={self.P} Q={self.Q} rho={self.rho}"


def channel_members(w) -> tuple[int, list[int]]:
    """Density and the indices (into ``w.values``) of balls on some
    channel."""
    w = _partial(w)
    if not len(w):
        raise EmptyPermutation("permutation has no balls")
    rows, cols = _lists(w)
    lengths = kernels.chain_lengths(rows, cols, w.n)
    m = max(lengths)
    return m, [a for a, L in enumerate(lengths) if L == m]


def channel_density(w) -> int:
    return channel_members(w)[0]


def _some_channel(w: PartialPermutation, start: int) -> list[Cell]:
    rows, cols = _lists(w)
    n = w.n
    return [Cell(rows[b] + t * n, cols[b] + t * n) for b, t in kernels.cycle_chain(rows, cols, n, start)]


def _initial_labels(w: PartialPermutation, channel: list[Cell], m: int) -> list[int]:
    """Seed labels: the channel's representatives in row order get
    ``1..m``, everything else is unconstrained."""
    n = w.n
    reps = sorted(Cell(c.row - (c.row - 1) // n * n, c.col - (c.row - 1) // n * n) for c in channel)
    if len(reps) != m:
        raise InvariantError("channel does not have one ball per label")
    seed = {c.row: t + 1 for t, c in enumerate(reps)}
    return [seed.get(i, kernels.NEG_INF) for i, _ in w.values]


def channel_numbering(w, channel) -> Numbering:
    """Largest path numbering ending on ``channel``."""
    w = _partial(w)
    m = len(channel)
    rows, cols = _lists(w)
    d = kernels.maxplus_numbering(rows, cols, w.n, m, _initial_labels(w, list(channel), m))
    if d is None or kernels.NEG_INF in d:
        raise InvariantError("channel numbering did not settle")
    return Numbering(w.n, m, tuple(w.balls()), tuple(d))


def southwest_channel(w) -> tuple[Cell, ...]:
    """Representatives (rows in ``1..n``) of the southwest-most channel."""
    w = _partial(w)
    m, members = channel_members(w)
    d = channel_numbering(w, _some_channel(w, members[0]))
    n = w.n
    best: dict[int, Cell] = {}
    for a in members:
        b, lab = d.balls[a], d.labels[a]
        q, r = divmod(lab - 1, m)
        cell = Cell(b.row - q * n, b.col - q * n)  # normalized to label r + 1
        if r not in best or cell.row > best[r].row:
            best[r] = cell
    chain = [best[r] for r in range(m)]
    for x, y in zip(chain, chain[1:] + [Cell(chain[0].row + n, chain[0].col + n)]):
        if not strictly_nw(x, y):
            raise InvariantError("southwest channel is not a chain")
    return tuple(sorted(Cell(c.row - (c.row - 1) // n * n, c.col - (c.row - 1) // n * n) for c in chain))


def southwest_numbering(w) -> Numbering:
    w = _partial(w)
    return channel_numbering(w, southwest_channel(w))


def zigzag_decomposition(w, numbering: Numbering) -> list[ZigZag]:
    """One zig-zag per label in a window of ``m`` consecutive labels."""
    start = min(numbering.labels)
    out = []
    for label in range(start, start + numbering.m):
        balls = numbering.instances(label)
        if not balls:
            raise InvariantError(f"label {label} has no balls")
        for a, b in zip(balls, balls[1:]):
            if not (a.row < b.row and a.col > b.col):
                raise InvariantError(f"label {label} is not a NE-to-SW chain")
        back = Cell(balls[0].row, balls[-1].col)
        outer = tuple(Cell(b.row, a.col) for a, b in zip(balls, balls[1:]))
        out.append(ZigZag(label, tuple(balls), outer, back))
    return out


def forward_step(w) -> tuple[Stream, PartialPermutation]:
    w = _partial(w)
    zz = zigzag_decomposition(w, southwest_numbering(w))
    stream = Stream(w.n, tuple(z.back for z in zz))
    try:
        rest = PartialPermutation.from_balls(w.n, [c for z in zz for c in z.outer])
    except DuplicateResidue as exc:
        raise InvariantError(f"outer corners collide: {exc}") from exc
    if len(rest) + stream.density != len(w):
        raise InvariantError("forward step lost balls")
    return stream, rest


def phi(w: AffinePermutation) -> Triple:
    """Forward map: record (columns, rows, altitude) of each peeled stream."""
    v = _partial(w)
    n = v.n
    p_rows, q_rows, rho = [], [], []
    while len(v):
        stream, v = forward_step(v)
        data = stream.data()
        p_rows.append(sorted(data.cols))
        q_rows.append(sorted(data.rows))
        rho.append(data.altitude)
    return Triple(Tabloid.from_rows(n, p_rows), Tabloid.from_rows(n, q_rows), tuple(rho))


def backward_step(v: PartialPermutation, stream: Stream) -> PartialPermutation:
    """Rebuild the layer whose forward step produced ``stream`` and ``v``."""
    n = stream.n
    if v.n != n:
        raise ValidationError("modulus mismatch between stream and permutation")
    data = stream.data()
    if data.rows & v.rows() or data.cols & v.cols():
        raise SharedRowOrColumn("stream and permutation share a row or column class")
    m = stream.density
    srows, scols = stream.rows_cols()
    inner = []
    groups: dict[int, list[Cell]] = defaultdict(list)
    if len(v):
        rows, cols = _lists(v)
        bound = kernels.stream_bounds(rows, cols, srows, scols, n)
        d = kernels.minplus_numbering(rows, cols, n, m, bound)
        if d is None:
            raise MalformedFiber("backward numbering did not settle")
        for r, c, lab in zip(rows, cols, d):
            q, t = divmod(lab - 1, m)
            groups[t].append(Cell(r - q * n, c - q * n))
    for t, s in enumerate(stream.cells):
        balls = sorted(groups.get(t, []))
        for a, b in zip(balls, balls[1:]):
            if not (a.row < b.row and a.col > b.col):
                raise MalformedFiber(f"balls labeled {t + 1} are not a NE-to-SW chain")
        if balls and not (s.row < balls[0].row and s.col < balls[-1].col):
            raise MalformedFiber(f"balls labeled {t + 1} are not strictly SE of the stream")
        rows_ = [s.row] + [b.row for b in balls]
        cols_ = [b.col for b in balls] + [s.col]
        inner.extend(Cell(r, c) for r, c in zip(rows_, cols_))
    try:
        return PartialPermutation.from_balls(n, inner)
    except DuplicateResidue as exc:
        raise MalformedFiber(f"rebuilt balls collide: {exc}") from exc


def psi(t: Triple) -> AffinePermutation:
    """Backward map.  Accepts any weight; on dominant triples it inverts
    :func:`phi`."""
    n = t.n
    if not t.P.is_complete():
        raise ValidationError("P and Q must use every residue")
    v = PartialPermutation.empty(n)
    for cols, rows, r in reversed(list(zip(t.P.rows, t.Q.rows, t.rho))):
        v = backward_step(v, make_stream(rows, cols, r, n))
    return v.to_affine()


def block_diagonal_sum(w) -> int:
    return sum(block_diagonal(b, w.n) for b in _partial(w).balls())
