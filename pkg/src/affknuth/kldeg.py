"""Graphs of tabloids under Knuth moves, their connected components, and
the monodromy of weights along closed walks.

Columns are 1-based in every public function, matching how tableaux are
usually drawn.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .ambc import Triple, phi, psi
from .errors import InvariantError, NotRebasable, ValidationError
from .intlattice import kernel_basis
from .tabloid import (
    Partition,
    Tableau,
    Tabloid,
    charge,
    column_superstandard,
    column_superstandard_tableau,
    d_lambda,
)

__all__ = [
    "DegGraph",
    "all_tabloids",
    "component_id",
    "components_agree",
    "shift_action",
    "cumulative_multiplicities",
    "block_vector",
    "gup_contains",
    "gup_generators",
    "gup_basis",
    "diophantine_basis",
    "column_rebase",
    "rebase_weight_change",
    "steps_weight_change",
    "column_cycle",
    "cycle_weight_change",
    "monodromy_generator_loop",
    "lift_loop",
    "Move",
]

MAX_GRAPH_N = 9


def _shape(shape) -> Partition:
    return shape if isinstance(shape, Partition) else Partition(tuple(shape))


# -- the graph ---------------------------------------------------------------


def all_tabloids(shape, n: int | None = None) -> list[Tabloid]:
    """Every complete tabloid of ``shape`` (rows chosen as combinations)."""
    shape = _shape(shape)
    n = shape.size if n is None else n
    if n != shape.size:
        raise ValidationError("tabloids must use every residue")
    out = []

    def rec(k, remaining, rows):
        if k == len(shape):
            out.append(Tabloid.from_rows(n, rows))
            return
        for row in combinations(remaining, shape[k]):
            rest = [x for x in remaining if x not in row]
            rec(k + 1, rest, rows + [row])

    rec(0, list(range(1, n + 1)), [])
    return out


@dataclass
class DegGraph:
    """Tabloids of one shape joined by Knuth moves.

    ``edges[v]`` lists ``(exchanged, u)`` where ``exchanged`` is the smaller
    position ``i`` of the pair ``(i, i+1)`` swapped (``n`` for the pair
    ``(n, 1)``).
    """

    shape: Partition
    vertices: list[Tabloid]
    edges: dict[Tabloid, list[tuple[int, Tabloid]]]

    @classmethod
    def build(cls, shape) -> "DegGraph":
        shape = _shape(shape)
        if shape.size > MAX_GRAPH_N:
            raise ValidationError(f"graphs are only built for n <= {MAX_GRAPH_N}")
        verts = all_tabloids(shape)
        n = shape.size
        index = {t: k for k, t in enumerate(verts)}
        # rows as a position -> row map and tau as a bitmask keep this fast
        rowmaps = [tuple(t.row_of(x) for x in range(1, n + 1)) for t in verts]
        edges: dict[Tabloid, list[tuple[int, Tabloid]]] = {}

        def tau(r):
            return sum(1 << a for a in range(n) if r[a] < r[(a + 1) % n])

        taus = [tau(r) for r in rowmaps]
        for k, t in enumerate(verts):
            r = rowmaps[k]
            adj = []
            for a in range(n):
                b = (a + 1) % n
                if r[a] == r[b]:
                    continue
                u = t.exchange(a + 1, b + 1)
                t0, t1 = taus[k], taus[index[u]]
                if t0 & t1 != t0 and t0 & t1 != t1:
                    adj.append((a + 1, u))
            edges[t] = adj
        return cls(shape, verts, edges)

    def components(self) -> list[list[Tabloid]]:
        seen: set[Tabloid] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            seen.add(v)
            comp, queue = [v], deque([v])
            while queue:
                x = queue.popleft()
                for _, y in self.edges[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(comp)
        return comps

    def shortest_path(self, src: Tabloid, dst: Tabloid) -> list[Tabloid]:
        prev = {src: None}
        queue = deque([src])
        while queue:
            x = queue.popleft()
            if x == dst:
                break
            for _, y in self.edges[x]:
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        if dst not in prev:
            raise ValidationError("tabloids are in different components")
        path = [dst]
        while path[-1] != src:
            path.append(prev[path[-1]])
        return path[::-1]

    def edge_records(self) -> Iterable[dict]:
        for t in self.vertices:
            for i, u in self.edges[t]:
                yield {"from": t.to_json(), "to": u.to_json(), "exchanged": i}


def component_id(t: Tabloid) -> int:
    return charge(t) % d_lambda(t.shape)


def components_agree(a: Tabloid, b: Tabloid) -> bool:
    return a.shape == b.shape and component_id(a) == component_id(b)


def shift_action(t: Tabloid) -> Tabloid:
    return t.shifted(1)


# -- the lattice of allowed weight changes -----------------------------------


def cumulative_multiplicities(shape) -> tuple[int, ...]:
    """Running totals of part multiplicities, i.e. the distinct column
    lengths in increasing order."""
    shape = _shape(shape)
    return tuple(sorted(set(shape.conjugate)))


def block_vector(shape, k: int) -> tuple[int, ...]:
    """Ones in the first ``k`` rows."""
    return tuple(int(r < k) for r in range(len(_shape(shape))))


def diophantine_basis(sizes: Sequence[int]) -> dict[tuple[int, int], tuple[int, ...]]:
    """Pairwise solutions of ``sum sizes[i] x[i] = 0``, keyed by 1-based
    index pairs ``(i, j)`` with ``i < j``."""
    k = len(sizes)
    out = {}
    for i in range(k):
        for j in range(i + 1, k):
            g = math.gcd(sizes[i], sizes[j])
            x = [0] * k
            x[i] = -sizes[j] // g
            x[j] = sizes[i] // g
            out[(i + 1, j + 1)] = tuple(x)
    return out


def _combine(shape, coeffs: Sequence[int]) -> tuple[int, ...]:
    sizes = cumulative_multiplicities(shape)
    ell = len(_shape(shape))
    v = [0] * ell
    for a, m in zip(coeffs, sizes):
        for r in range(m):
            v[r] += a
    return tuple(v)


def gup_generators(shape) -> dict[tuple[int, int], tuple[int, ...]]:
    """The vectors ``v^(i,j)`` obtained from the pairwise basis."""
    return {key: _combine(shape, x) for key, x in diophantine_basis(cumulative_multiplicities(shape)).items()}


def gup_basis(shape) -> list[tuple[int, ...]]:
    """A lattice basis computed from an integer kernel, independent of the
    pairwise construction."""
    return [_combine(shape, x) for x in kernel_basis(cumulative_multiplicities(shape))]


def gup_contains(shape, v: Sequence[int]) -> bool:
    """Membership: ``v`` is an integer combination of the block vectors
    whose coefficients annihilate the column sizes."""
    shape = _shape(shape)
    if len(v) != len(shape):
        return False
    sizes = cumulative_multiplicities(shape)
    # coefficient of block vector j is the jump of v at row sizes[j] - 1
    coeffs = []
    for j, m in enumerate(sizes):
        nxt = v[m] if m < len(v) else 0
        coeffs.append(v[m - 1] - nxt)
    if _combine(shape, coeffs) != tuple(v):
        return False
    return sum(a * m for a, m in zip(coeffs, sizes)) == 0


# -- column rebases and cycles -----------------------------------------------


def _run(start: int, length: int, n: int) -> list[int]:
    return [(start + t - 1) % n + 1 for t in range(length)]


def _rebase_params(t: Tableau, c1: int, c2: int, direction: str) -> tuple[int, int, int]:
    """Return ``(i, k, l)`` after checking the precondition."""
    n = t.n
    if c1 == c2 or min(c1, c2) < 1 or max(c1, c2) > len(t.rows[0]):
        raise NotRebasable(f"bad column pair ({c1}, {c2})")
    long_, short = t.column(c1 - 1), t.column(c2 - 1)
    l = len(short)
    k = len(long_) - l
    if l == 0 or k < 0:
        raise NotRebasable("second column must be nonempty and not longer than the first")
    if direction == "forward":
        i = long_[0] - 1
        ok = long_ == _run(i + 1, k + l, n) and short == _run(i + k + l + 1, l, n)
    elif direction == "backward":
        i = short[0] - 1
        ok = short == _run(i + 1, l, n) and long_ == _run(i + l + 1, k + l, n)
    else:
        raise ValidationError(f"unknown direction {direction!r}")
    if not ok:
        raise NotRebasable(f"columns {c1}, {c2} do not hold the required consecutive runs")
    return i % n, k, l


def _forward_steps(t: Tableau, c1: int, c2: int, k: int, l: int) -> list[Tableau]:
    seq = [t]
    h = k + l
    for j in range(1, h * l + 1):
        m = -(-j // h)
        seq.append(seq[-1].swap((h * m - j, c1 - 1), (m - 1, c2 - 1)))
    return seq


def column_rebase(t: Tableau, c1: int, c2: int, direction: str = "forward") -> list[Tableau]:
    """All tableaux visited by a column rebase, endpoints included.

    ``c1`` is the column that starts (forward) with the run ``i+1..i+k+l``;
    ``c2`` the shorter one.  A backward rebase retraces the forward rebase
    that ends at ``t``.
    """
    i, k, l = _rebase_params(t, c1, c2, direction)
    n = t.n
    if direction == "forward":
        seq = _forward_steps(t, c1, c2, k, l)
    else:
        start = t.with_columns({c1 - 1: _run(i + 1, k + l, n), c2 - 1: _run(i + k + l + 1, l, n)})
        seq = _forward_steps(start, c1, c2, k, l)[::-1]
        if seq[0] != t:
            raise InvariantError("backward rebase does not retrace to its input")
    for a, b in zip(seq, seq[1:]):
        ta, tb = a.tabloid(), b.tabloid()
        if ta != tb and not any(u == tb for _, u in ta.knuth_neighbors()):
            raise InvariantError(f"rebase step {a} -> {b} is not a Knuth move")
    return seq


@dataclass(frozen=True)
class Move:
    """A tabloid Knuth move exchanging ``i`` and ``i+1`` (cyclically)."""

    i: int
    before: Tabloid
    after: Tabloid


def tabloid_moves(seq: Sequence) -> list[Move]:
    """Knuth moves between consecutive distinct tabloids of ``seq``."""
    moves = []
    tabs = [x.tabloid() if isinstance(x, Tableau) else x for x in seq]
    for a, b in zip(tabs, tabs[1:]):
        if a == b:
            continue
        hit = [i for i in range(1, a.n + 1) if a.knuth_move(i) == b]
        if len(hit) != 1:
            raise InvariantError(f"{a} -> {b} is not a single Knuth move")
        moves.append(Move(hit[0], a, b))
    return moves


def steps_weight_change(seq: Sequence) -> tuple[int, ...]:
    """Sum of per-move weight changes: a move exchanging ``n`` and ``1``
    takes one from the row of ``n`` and gives one to the row of ``1``."""
    tabs = [x.tabloid() if isinstance(x, Tableau) else x for x in seq]
    delta = [0] * len(tabs[0].rows)
    for mv in tabloid_moves(tabs):
        if mv.i == mv.before.n:
            delta[mv.before.row_of(mv.before.n)] -= 1
            delta[mv.before.row_of(1)] += 1
    return tuple(delta)


def _two_column_disp(t: Tableau, c1: int, c2: int, k: int, l: int) -> tuple[int, ...]:
    """Rows of the ``l`` cells after the cell of 1 in the two-column cyclic
    order (up each column, from the top of ``c2`` to the bottom of ``c1``
    and from the top of ``c1`` to the bottom of ``c2``)."""
    ell = len(t.rows)
    cells = [(r, c2 - 1) for r in reversed(range(l))] + [(r, c1 - 1) for r in reversed(range(k + l))]
    # ``cells`` lists the order starting from the bottom of c2
    try:
        pos = next(p for p, (r, c) in enumerate(cells) if t.rows[r][c] == 1)
    except StopIteration:
        return block_vector(t.shape, l)
    out = [0] * ell
    for s in range(1, l + 1):
        r, _ = cells[(pos + s) % len(cells)]
        out[r] += 1
    return tuple(out)


def rebase_weight_change(t: Tableau, c1: int, c2: int, direction: str = "forward") -> tuple[int, ...]:
    """Closed form: ones on the first ``l`` rows minus the displacement
    vector of the forward rebase's starting tableau."""
    i, k, l = _rebase_params(t, c1, c2, direction)
    start = column_rebase(t, c1, c2, direction)[0 if direction == "forward" else -1]
    ucol = block_vector(t.shape, l)
    disp = _two_column_disp(start, c1, c2, k, l)
    fwd = tuple(a - b for a, b in zip(ucol, disp))
    return fwd if direction == "forward" else tuple(-x for x in fwd)


def _superstandard_start(t: Tableau) -> int:
    s = t.rows[0][0]
    if column_superstandard_tableau(t.shape, s, t.n) != t:
        raise NotRebasable("tableau is not column superstandard")
    return s


def column_cycle(t: Tableau, j: int, direction: str = "forward") -> list[Tableau]:
    """Concatenated rebases moving column ``j`` past every other column.

    Forward: rebase columns ``j-1, ..., 1`` against ``j``, then undo
    rebases of ``j`` against the last, ..., ``j+1``-st column.  The result
    is column superstandard with start advanced by the length of column
    ``j``.  A backward cycle is the reversed forward cycle ending at ``t``.
    """
    shape = t.shape
    conj = shape.conjugate
    if not 1 <= j <= len(conj):
        raise NotRebasable(f"no column {j}")
    s = _superstandard_start(t)
    if direction == "backward":
        start = column_superstandard_tableau(shape, s - conj[j - 1], t.n)
        seq = column_cycle(start, j, "forward")[::-1]
        if seq[0] != t:
            raise InvariantError("backward cycle does not retrace to its input")
        return seq
    if direction != "forward":
        raise ValidationError(f"unknown direction {direction!r}")
    seq = [t]
    for c in range(j - 1, 0, -1):
        seq += column_rebase(seq[-1], c, j, "forward")[1:]
    for c in range(len(conj), j, -1):
        seq += column_rebase(seq[-1], j, c, "backward")[1:]
    expect = column_superstandard_tableau(shape, s + conj[j - 1], t.n)
    if seq[-1] != expect:
        raise InvariantError("column cycle did not end column superstandard")
    return seq


def _cyclic_disp(t: Tableau, k: int) -> tuple[int, ...]:
    """Rows of the ``k`` cells following the cell of 1 when cells are read
    up each column and from the top of a column to the bottom of the
    previous one (the first column wrapping to the last)."""
    conj = t.shape.conjugate
    order = []  # cells in the cyclic order, starting at the bottom of the last column
    for c in reversed(range(len(conj))):
        order += [(r, c) for r in reversed(range(conj[c]))]
    pos = next(p for p, (r, c) in enumerate(order) if t.rows[r][c] == 1)
    out = [0] * len(t.rows)
    for s in range(1, k + 1):
        out[order[(pos + s) % len(order)][0]] += 1
    return tuple(out)


def cycle_weight_change(t: Tableau, j: int, direction: str = "forward") -> tuple[int, ...]:
    conj = t.shape.conjugate
    if not 1 <= j <= len(conj):
        raise NotRebasable(f"no column {j}")
    s = _superstandard_start(t)
    k = conj[j - 1]
    if direction == "backward":
        start = column_superstandard_tableau(t.shape, s - k, t.n)
        return tuple(-x for x in cycle_weight_change(start, j, "forward"))
    ucol = block_vector(t.shape, k)
    return tuple(a - b for a, b in zip(ucol, _cyclic_disp(t, k)))


# -- loops and their lifts ---------------------------------------------------


def _column_of_length(shape: Partition, size: int) -> int:
    return next(c + 1 for c, h in enumerate(shape.conjugate) if h == size)


def monodromy_generator_loop(shape, i: int, j: int) -> tuple[list[Tabloid], tuple[int, ...]]:
    """Closed walk for the pair ``(i, j)`` of column sizes and the weight
    change predicted for its lift.

    The walk starts at the column superstandard tabloid with start 1, runs
    ``size_j/g`` backward cycles on a column of size ``size_i``, then
    ``size_i/g`` forward cycles on a column of size ``size_j``.
    """
    shape = _shape(shape)
    sizes = cumulative_multiplicities(shape)
    if not 1 <= i < j <= len(sizes):
        raise ValidationError(f"need 1 <= i < j <= {len(sizes)}")
    mi, mj = sizes[i - 1], sizes[j - 1]
    g = math.gcd(mi, mj)
    ci, cj = _column_of_length(shape, mi), _column_of_length(shape, mj)
    n = shape.size
    seq = [column_superstandard_tableau(shape, 1, n)]
    predicted = [0] * len(shape)
    for _ in range(mj // g):
        delta = cycle_weight_change(seq[-1], ci, "backward")
        seq += column_cycle(seq[-1], ci, "backward")[1:]
        predicted = [a + b for a, b in zip(predicted, delta)]
    for _ in range(mi // g):
        delta = cycle_weight_change(seq[-1], cj, "forward")
        seq += column_cycle(seq[-1], cj, "forward")[1:]
        predicted = [a + b for a, b in zip(predicted, delta)]
    if seq[-1] != seq[0]:
        raise InvariantError("generator walk is not closed")
    loop = [x.tabloid() for x in seq]
    return loop, tuple(predicted)


def lift_loop(loop: Sequence[Tabloid], p: Tabloid | None = None, rho: Sequence[int] | None = None) -> tuple[int, ...]:
    """Follow ``loop`` (a walk of Q-tabloids) with permutation Knuth moves
    and return the change in weight.

    The start is ``psi(p, loop[0], rho)`` with ``p`` defaulting to the
    column superstandard tabloid and ``rho`` to zero.  Each step picks the
    unique Knuth neighbour whose Q-tabloid is the next vertex.
    """
    q0 = loop[0]
    shape = q0.shape
    p = column_superstandard(shape, 1, q0.n) if p is None else p
    rho = (0,) * len(shape) if rho is None else tuple(rho)
    w = psi(Triple(p, q0, rho))
    start = phi(w)
    cur = start
    for target in loop[1:]:
        if target == cur.Q:
            continue
        hits = [(v, t) for _, v in w.knuth_neighbors() for t in [phi(v)] if t.Q == target]
        if len(hits) != 1:
            raise InvariantError(f"{len(hits)} lifts of the move {cur.Q} -> {target}")
        w, cur = hits[0]
        if cur.P != p:
            raise InvariantError("a Knuth move changed P")
    if cur.Q != q0:
        raise ValidationError("walk is not closed")
    return tuple(a - b for a, b in zip(cur.rho, start.rho))

