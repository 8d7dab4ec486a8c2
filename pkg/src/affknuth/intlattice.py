"""Small exact integer-lattice helpers: row Hermite normal form and integer
kernels of a single linear form."""
from __future__ import annotations

import math
from typing import Sequence

__all__ = ["hermite_normal_form", "same_lattice", "kernel_basis"]


def hermite_normal_form(vectors: Sequence[Sequence[int]], dim: int | None = None) -> list[tuple[int, ...]]:
    """Row-style HNF of the lattice spanned by ``vectors``.

    Nonzero rows only, pivots positive and increasing left to right, entries
    above each pivot reduced into ``[0, pivot)``.  Two generating sets span
    the same lattice iff their HNFs are equal.
    """
    rows = [list(v) for v in vectors if any(v)]
    if dim is None:
        dim = len(rows[0]) if rows else 0
    out: list[list[int]] = []
    col = 0
    while rows and col < dim:
        nz = [r for r in rows if r[col]]
        if not nz:
            col += 1
            continue
        # Euclid on column ``col`` across the active rows
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                q = r[col] // piv[col]
                for c in range(col, dim):
                    r[c] -= q * piv[c]
            rows = [r for r in rows if any(r)]
            nz = [r for r in rows if r[col]]
        piv = nz[0]
        rows.remove(piv)
        if piv[col] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        col += 1
    for i, piv in enumerate(out):
        p = next(c for c, x in enumerate(piv) if x)
        for prev in out[:i]:
            q = prev[p] // piv[p]
            if q:
                for c in range(dim):
                    prev[c] -= q * piv[c]
    return [tuple(r) for r in out]


def same_lattice(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], dim: int) -> bool:
    return hermite_normal_form(a, dim) == hermite_normal_form(b, dim)


def kernel_basis(coeffs: Sequence[int]) -> list[tuple[int, ...]]:
    """Basis of ``{x in Z^k : sum coeffs[i] x[i] = 0}``.

    Column-reduces the row ``coeffs`` by unimodular operations tracked on an
    identity matrix; the columns that end at zero span the kernel.
    """
    k = len(coeffs)
    a = list(coeffs)
    u = [[int(i == j) for j in range(k)] for i in range(k)]  # columns of u track a
    while sum(1 for x in a if x) > 1:
        idx = [i for i in range(k) if a[i]]
        p = min(idx, key=lambda i: abs(a[i]))
        for i in idx:
            if i == p:
                continue
            q = a[i] // a[p]
            a[i] -= q * a[p]
            for r in range(k):
                u[r][i] -= q * u[r][p]
    return [tuple(u[r][i] for r in range(k)) for i in range(k) if a[i] == 0]


def gcd_all(values: Sequence[int]) -> int:
    g = 0
    for v in values:
        g = math.gcd(g, v)
    return g
