"""Pure-Python versions of the inner loops.

Every function takes balls as two parallel integer lists: ``rows`` (each in
``1..n``) and ``cols`` (any integers).  A ball index ``a`` stands for the
whole translation class of ``(rows[a], cols[a])``.  ``_kernels.pyx`` mirrors
this file line for line.
"""

NEG_INF = -(1 << 60)
POS_INF = 1 << 60


def cycle_chain(rows, cols, n, a):
    """Longest strict SE chain from ball ``a`` up to (excluding) its own
    translate by ``(n, n)``.

    Returns ``[(index, shift), ...]`` starting with ``(a, 0)``; the ball at
    each step is ``(rows[index] + shift*n, cols[index] + shift*n)``.
    """
    k = len(rows)
    ra = rows[a]
    ca = cols[a]
    cand = []
    for b in range(k):
        if b == a:
            continue
        t = 0 if rows[b] > ra else 1
        c = cols[b] + t * n
        if ca < c < ca + n:
            cand.append((rows[b] + t * n, c, b, t))
    cand.sort()
    m = len(cand)
    best = [1] * m
    prev = [-1] * m
    for x in range(m):
        for y in range(x):
            if cand[y][1] < cand[x][1] and best[y] + 1 > best[x]:
                best[x] = best[y] + 1
                prev[x] = y
    chain = []
    if m:
        x = max(range(m), key=lambda i: (best[i], -i))
        while x >= 0:
            chain.append((cand[x][2], cand[x][3]))
            x = prev[x]
    chain.append((a, 0))
    chain.reverse()
    return chain


def chain_lengths(rows, cols, n):
    return [len(cycle_chain(rows, cols, n, a)) for a in range(len(rows))]


def maxplus_numbering(rows, cols, n, m, init):
    """Largest labels ``d`` with ``d[a] >= init[a]`` and ``d[a] >= d[b] + 1``
    whenever a translate of ``b`` lies strictly NW of ``a``.

    ``init`` uses NEG_INF for unconstrained balls.  Returns None if the
    relaxation does not settle (a positive cycle).
    """
    k = len(rows)
    d = list(init)
    for _ in range(k + 2):
        changed = False
        for a in range(k):
            for b in range(k):
                if d[b] == NEG_INF:
                    continue
                t = min((rows[a] - rows[b] - 1) // n, (cols[a] - cols[b] - 1) // n)
                v = d[b] + t * m + 1
                if v > d[a]:
                    d[a] = v
                    changed = True
        if not changed:
            return d
    return None


def minplus_numbering(rows, cols, n, m, bound):
    """Largest labels ``d <= bound`` with ``d[a] <= d[b] - 1`` whenever a
    translate of ``b`` lies strictly SE of ``a``.  None if unsettled."""
    k = len(rows)
    d = list(bound)
    for _ in range(k + 2):
        changed = False
        for a in range(k):
            for b in range(k):
                t = max((rows[a] - rows[b]) // n + 1, (cols[a] - cols[b]) // n + 1)
                v = d[b] + t * m - 1
                if v < d[a]:
                    d[a] = v
                    changed = True
        if not changed:
            return d
    return None


def stream_bounds(rows, cols, srows, scols, n):
    """For each ball, the largest label ``i`` of a stream cell lying strictly
    NW of it, where stream cell ``t`` (0-based) carries label ``t + 1`` and
    labels grow by ``len(srows)`` per period."""
    m = len(srows)
    out = []
    for a in range(len(rows)):
        best = NEG_INF
        for t in range(m):
            q = min((rows[a] - srows[t] - 1) // n, (cols[a] - scols[t] - 1) // n)
            v = t + 1 + q * m
            if v > best:
                best = v
        out.append(best)
    return out
