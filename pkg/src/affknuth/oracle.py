"""Brute-force enumeration and a registry of exhaustive checks.

Each check walks a finite universe (permutations in a shift band, or all
tabloids of the small shapes) and compares the fast implementation against
an independent computation.  Reports are plain dicts so they serialize
directly to JSON.
"""
from __future__ import annotations

import itertools
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .ambc import Triple, phi, psi
from .errors import AffknuthError, UnknownTheorem, ValidationError
from .kldeg import (
    MAX_GRAPH_N,
    DegGraph,
    component_id,
    gup_basis,
    gup_contains,
    lift_loop,
)
from .intlattice import same_lattice
from .lattice import Cell
from .perm import AffinePermutation, brute_inversion_count
from .stream import (
    dominance_constant,
    dominance_constant_by_concurrency,
    dominant_representative,
    is_dominant,
)
from .tabloid import Tabloid, d_lambda, partitions, shape_inversions, weight_inversions

__all__ = [
    "EnumerationSpec",
    "enumerate_perms",
    "bfs_knuth_class",
    "brute_southwest_channel",
    "THEOREMS",
    "verify",
    "verify_all",
]

MAX_FAILURES = 20


@dataclass(frozen=True)
class EnumerationSpec:
    """Windows ``w(i) = sigma(i) + n * t_i`` with ``sigma`` a finite
    permutation, ``|t_i| <= shift_band`` and ``n_min <= n <= n_max``.

    ``total_shift`` optionally bounds ``|sum t_i|`` as well.
    """

    n_max: int = 4
    shift_band: int = 1
    n_min: int = 1
    total_shift: int | None = None

    def __post_init__(self):
        if self.n_min < 1 or self.n_max < self.n_min:
            raise ValidationError(f"bad modulus range {self.n_min}..{self.n_max}")
        if self.shift_band < 0:
            raise ValidationError("shift band must be nonnegative")

    @property
    def moduli(self) -> range:
        return range(self.n_min, self.n_max + 1)

    def to_json(self) -> dict:
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "shift_band": self.shift_band,
            "total_shift": self.total_shift,
        }


def _shift_vectors(spec: EnumerationSpec, n: int) -> list[tuple[int, ...]]:
    band = range(-spec.shift_band, spec.shift_band + 1)
    out = []
    for ts in itertools.product(band, repeat=n):
        if spec.total_shift is None or abs(sum(ts)) <= spec.total_shift:
            out.append(ts)
    return out


def _windows_for(spec: EnumerationSpec, n: int, sigma: tuple[int, ...]) -> list[tuple[int, ...]]:
    return [tuple(s + n * t for s, t in zip(sigma, ts)) for ts in _shift_vectors(spec, n)]


def enumerate_perms(spec: EnumerationSpec) -> Iterator[AffinePermutation]:
    """Every window in the band, in a fixed order, without repeats."""
    seen: set[tuple[int, ...]] = set()
    for n in spec.moduli:
        for sigma in itertools.permutations(range(1, n + 1)):
            for window in _windows_for(spec, n, sigma):
                if window not in seen:
                    seen.add(window)
                    yield AffinePermutation(n, window)


def bfs_knuth_class(w: AffinePermutation, radius: int | None = None) -> set[AffinePermutation]:
    """Permutations reachable from ``w`` by at most ``radius`` Knuth moves
    (default ``2 n^2``)."""
    if radius is None:
        radius = 2 * w.n * w.n
    if radius < 0:
        raise ValidationError("radius must be nonnegative")
    dist = {w: 0}
    queue = deque([w])
    while queue:
        v = queue.popleft()
        if dist[v] == radius:
            continue
        for _, u in v.knuth_neighbors():
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return set(dist)


# -- a channel search that does not share code with ambc ---------------------


def _cyclic_chain(cells: list[Cell], n: int) -> bool:
    """Do the translation classes of ``cells`` line up as a cyclic SE chain?"""
    a = cells[0]
    reps = [a]
    for c in cells[1:]:
        t = 0 if c.row > a.row else 1
        reps.append(Cell(c.row + t * n, c.col + t * n))
    reps.sort()
    reps.append(Cell(a.row + n, a.col + n))
    return all(x.row < y.row and x.col < y.col for x, y in zip(reps, reps[1:]))


def _weakly_sw_of_class(c: Cell, d: Cell, n: int) -> bool:
    # some translate d + k(n, n) has row <= c.row and col >= c.col
    k_max = (c.row - d.row) // n
    return d.col + k_max * n >= c.col


def brute_southwest_channel(w) -> tuple[Cell, ...]:
    """Try every subset of ball classes and keep the southwest-most of the
    largest cyclic chains."""
    p = w.as_partial() if isinstance(w, AffinePermutation) else w
    balls = p.balls()
    n = p.n
    chans: list[tuple[Cell, ...]] = []
    for size in range(len(balls), 0, -1):
        chans = [s for s in itertools.combinations(balls, size) if _cyclic_chain(list(s), n)]
        if chans:
            break

    def below(a, b):
        return all(any(_weakly_sw_of_class(x, y, n) for y in b) for x in a)

    mins = [a for a in chans if all(below(a, b) for b in chans)]
    if len(mins) != 1:
        raise ValidationError(f"no unique southwest channel among {len(chans)}")
    return tuple(sorted(mins[0]))


# -- per-permutation checks ----------------------------------------------------


def _check_roundtrip(w: AffinePermutation) -> str | None:
    t = phi(w)
    if not is_dominant(t.P, t.Q, t.rho):
        return f"phi gives a non-dominant triple {t}"
    back = psi(t)
    if back != w:
        return f"psi(phi(w)) = {back}"
    return None


def _check_descents(w: AffinePermutation) -> str | None:
    t = phi(w)
    if w.left_descents() != set(t.P.tau()):
        return f"left descents {sorted(w.left_descents())} vs tau(P) {sorted(t.P.tau())}"
    if w.right_descents() != set(t.Q.tau()):
        return f"right descents {sorted(w.right_descents())} vs tau(Q) {sorted(t.Q.tau())}"
    return None


def _check_inverse(w: AffinePermutation) -> str | None:
    t = phi(w)
    expect = Triple(t.Q, t.P, dominant_representative(t.Q, t.P, tuple(-x for x in t.rho)))
    got = phi(w.inverse())
    return None if got == expect else f"phi(w^-1) = {got}, expected {expect}"


def _check_sign(w: AffinePermutation) -> str | None:
    t = phi(w)
    inv = brute_inversion_count(w)
    lhs = (inv + w.shift_sum()) % 2
    rhs = (t.P.inversions() + t.Q.inversions() + shape_inversions(t.shape) + weight_inversions(t.shape, t.rho)) % 2
    if lhs != rhs:
        return f"parities differ: {lhs} vs {rhs}"
    if w.inversion_count() != inv:
        return f"closed-form inversions {w.inversion_count()} vs direct count {inv}"
    return None


def _expected_after_move(t: Triple, q_new: Tabloid) -> list[tuple[int, ...]]:
    """Weights allowed after a tabloid move ``t.Q -> q_new``, one per
    reading of the exchanged pair.

    For ``n >= 3`` the pair fixes ``i`` and the list has one entry.  For
    ``n = 2`` the pair ``{1, 2}`` is both ``(1, 2)`` and ``(n, 1)``, so both
    outcomes are listed.  Empty if the tabloids are not Knuth neighbours.
    """
    n = t.n
    out = []
    for i in range(1, n + 1):
        if t.Q.knuth_move(i) == q_new:
            rho = list(t.rho)
            if i == n:
                rho[t.Q.row_of(n)] -= 1
                rho[t.Q.row_of(1)] += 1
            out.append(tuple(rho))
    return out


def _check_knuth_action(w: AffinePermutation) -> str | None:
    t = phi(w)
    for i, v in w.knuth_neighbors():
        u = phi(v)
        if u.P != t.P:
            return f"move at {i} changes P to {u.P}"
        allowed = _expected_after_move(t, u.Q)
        if not allowed:
            return f"move at {i} takes Q to {u.Q}, not a tabloid Knuth neighbour"
        if u.rho not in allowed:
            return f"move at {i} gives weight {u.rho}, expected one of {allowed}"
    return None


def _check_covering(w: AffinePermutation) -> str | None:
    t = phi(w)
    lifted = [phi(v).Q for _, v in w.knuth_neighbors()]
    below = {u for _, u in t.Q.knuth_neighbors()}
    if len(lifted) != len(set(lifted)):
        return "two Knuth neighbours share a Q-tabloid"
    if set(lifted) != below:
        return f"{len(set(lifted))} lifted vs {len(below)} tabloid neighbours"
    return None


def _check_dominance(w: AffinePermutation) -> str | None:
    t = phi(w)
    for i in range(1, len(t.P.rows)):
        if len(t.P.rows[i - 1]) != len(t.P.rows[i]):
            continue
        a = dominance_constant(t.P, t.Q, i)
        b = dominance_constant_by_concurrency(t.P, t.Q, i)
        if a != b:
            return f"rows {i},{i + 1}: charge form {a} vs concurrency {b}"
    once = Triple(t.Q, t.P, dominant_representative(t.Q, t.P, tuple(-x for x in t.rho)))
    twice = Triple(once.Q, once.P, dominant_representative(once.Q, once.P, tuple(-x for x in once.rho)))
    if twice != t:
        return f"double involution returns {twice}"
    return None


PERM_CHECKS: dict[str, Callable[[AffinePermutation], str | None]] = {
    "roundtrip": _check_roundtrip,
    "descents": _check_descents,
    "inverse": _check_inverse,
    "sign": _check_sign,
    "knuth_action": _check_knuth_action,
    "covering": _check_covering,
    "dominance_charge_vs_concurrency": _check_dominance,
}


# -- per-shape checks ----------------------------------------------------------


def _shapes(spec: EnumerationSpec) -> Iterator:
    for n in spec.moduli:
        if n > MAX_GRAPH_N:
            break
        yield from partitions(n)


def _check_components(shape) -> str | None:
    g = DegGraph.build(shape)
    comps = g.components()
    d = d_lambda(shape)
    ids = [sorted({component_id(t) for t in c}) for c in comps]
    if any(len(s) != 1 for s in ids):
        return f"a component mixes charge classes {ids}"
    if len(comps) != d:
        return f"{len(comps)} components but d = {d}"
    return None


def _cycle_basis_loops(g: DegGraph) -> list[list[Tabloid]]:
    """One closed walk per non-tree edge of a BFS forest."""
    loops = []
    parent: dict[Tabloid, Tabloid | None] = {}
    for root in g.vertices:
        if root in parent:
            continue
        parent[root] = None
        queue = deque([root])
        order = []
        while queue:
            x = queue.popleft()
            order.append(x)
            for _, y in g.edges[x]:
                if y not in parent:
                    parent[y] = x
                    queue.append(y)

        def to_root(v):
            path = [v]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path

        done = set()
        for x in order:
            for _, y in g.edges[x]:
                if parent.get(y) == x or parent.get(x) == y or frozenset((x, y)) in done:
                    continue
                done.add(frozenset((x, y)))
                loops.append(to_root(x)[::-1] + to_root(y))
    return loops


def _block_constant(shape, v) -> bool:
    return all(len({v[r] for r in block}) == 1 for block in shape.blocks())


def _lifted_cycles(shape) -> list[tuple[list[Tabloid], tuple[int, ...]]]:
    g = DegGraph.build(shape)
    return [(loop, lift_loop(loop)) for loop in _cycle_basis_loops(g)]


def _check_monodromy(shape) -> str | None:
    lifts = _lifted_cycles(shape)
    for loop, v in lifts:
        if not gup_contains(shape, v):
            return f"loop through {loop[1]} lifts to {v}, outside the lattice"
    if not same_lattice([v for _, v in lifts], gup_basis(shape), len(shape)):
        return "lifted cycles span a smaller lattice"
    return None


def _check_block_constancy(shape) -> str | None:
    for loop, v in _lifted_cycles(shape):
        if not _block_constant(shape, v):
            return f"loop through {loop[1]} lifts to {v}, not constant on equal rows"
    return None


SHAPE_CHECKS: dict[str, Callable] = {
    "components": _check_components,
    "monodromy_membership": _check_monodromy,
    "block_constancy": _check_block_constancy,
}

THEOREMS = tuple(PERM_CHECKS) + tuple(SHAPE_CHECKS)


# -- driver --------------------------------------------------------------------


def _run_check(check, x) -> str | None:
    try:
        return check(x)
    except AffknuthError as exc:
        return f"{type(exc).__name__}: {exc}"


def _perm_chunk(args) -> tuple[int, list[dict]]:
    name, spec, n, sigma = args
    check = PERM_CHECKS[name]
    failures = []
    count = 0
    for window in _windows_for(spec, n, sigma):
        count += 1
        msg = _run_check(check, AffinePermutation(n, window))
        if msg is not None:
            failures.append(_perm_failure(n, window, msg))
    return count, failures


def _perm_failure(n: int, window, msg: str) -> dict:
    text = "[" + ",".join(map(str, window)) + "]"
    return {
        "n": n,
        "window": text,
        "detail": msg,
        "reproduce": f"affknuth phi --n {n} --window \"{text}\"",
    }


def _shape_chunk(args) -> tuple[int, list[dict]]:
    name, parts = args
    msg = _run_check(SHAPE_CHECKS[name], _as_partition(parts))
    if msg is None:
        return 1, []
    shape = ",".join(map(str, parts))
    return 1, [{
        "n": sum(parts),
        "shape": list(parts),
        "detail": msg,
        "reproduce": f"affknuth components --shape {shape}",
    }]


def _as_partition(parts):
    from .tabloid import Partition

    return Partition(tuple(parts))


def _failure_key(f: dict):
    return (f["n"], f.get("window", ""), f.get("shape", []))


def verify(theorem: str, spec: EnumerationSpec | None = None, jobs: int = 1) -> dict:
    """Run one registered check over the whole universe of ``spec``.

    The report lists at most ``MAX_FAILURES`` counterexamples, smallest
    modulus first, in a deterministic order whatever ``jobs`` is.
    """
    spec = EnumerationSpec() if spec is None else spec
    if theorem in PERM_CHECKS:
        tasks: list = []
        for n in spec.moduli:
            tasks += [(theorem, spec, n, sigma) for sigma in itertools.permutations(range(1, n + 1))]
        worker = _perm_chunk
    elif theorem in SHAPE_CHECKS:
        tasks = [(theorem, tuple(p.parts)) for p in _shapes(spec)]
        worker = _shape_chunk
    else:
        raise UnknownTheorem(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    results = _map(worker, tasks, jobs)
    checked = sum(c for c, _ in results)
    failures = sorted((f for _, fs in results for f in fs), key=_failure_key)
    return {
        "theorem": theorem,
        "spec": spec.to_json(),
        "checked": checked,
        "failure_count": len(failures),
        "failures": failures[:MAX_FAILURES],
    }


def verify_all(spec: EnumerationSpec | None = None, jobs: int = 1, theorems: Iterable[str] = THEOREMS) -> list[dict]:
    return [verify(name, spec, jobs) for name in theorems]


def _map(worker, tasks, jobs: int):
    if jobs <= 1 or len(tasks) < 2:
        return [worker(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
