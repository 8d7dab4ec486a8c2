# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled versions of the inner loops in ``_kernels_py``.

Signatures and results match the pure-Python module exactly; labels are
64-bit integers with the same sentinels.  ``cdivision=False`` keeps Python
floor division semantics for negative operands.
"""

NEG_INF = -(1 << 60)
POS_INF = 1 << 60

cdef long long C_NEG_INF = -(1 << 60)


cdef inline long long _fdiv(long long a, long long b):
    return a // b


def cycle_chain(rows, cols, long long n, Py_ssize_t a):
    cdef Py_ssize_t k = len(rows)
    cdef long long ra = rows[a]
    cdef long long ca = cols[a]
    cdef long long c, t
    cdef Py_ssize_t b, x, y, m
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
    cdef long long[:] ccol = _buffer(m)
    cdef long long[:] best = _buffer(m)
    cdef long long[:] prev = _buffer(m)
    for x in range(m):
        ccol[x] = cand[x][1]
        best[x] = 1
        prev[x] = -1
    for x in range(m):
        for y in range(x):
            if ccol[y] < ccol[x] and best[y] + 1 > best[x]:
                best[x] = best[y] + 1
                prev[x] = y
    chain = []
    cdef Py_ssize_t top
    if m:
        top = 0
        for x in range(1, m):
            if best[x] > best[top]:
                top = x
        x = top
        while x >= 0:
            chain.append((cand[x][2], cand[x][3]))
            x = prev[x]
    chain.append((a, 0))
    chain.reverse()
    return chain


def chain_lengths(rows, cols, long long n):
    return [len(cycle_chain(rows, cols, n, a)) for a in range(len(rows))]


def _buffer(Py_ssize_t m):
    import array
    return array.array("q", [0]) * max(m, 1)


def maxplus_numbering(rows, cols, long long n, long long m, init):
    cdef Py_ssize_t k = len(rows)
    cdef long long[:] r = _copy(rows)
    cdef long long[:] c = _copy(cols)
    cdef long long[:] d = _copy(init)
    cdef Py_ssize_t it, a, b
    cdef long long t, t2, v
    cdef bint changed
    for it in range(k + 2):
        changed = False
        for a in range(k):
            for b in range(k):
                if d[b] == C_NEG_INF:
                    continue
                t = _fdiv(r[a] - r[b] - 1, n)
                t2 = _fdiv(c[a] - c[b] - 1, n)
                if t2 < t:
                    t = t2
                v = d[b] + t * m + 1
                if v > d[a]:
                    d[a] = v
                    changed = True
        if not changed:
            return [d[a] for a in range(k)]
    return None


def minplus_numbering(rows, cols, long long n, long long m, bound):
    cdef Py_ssize_t k = len(rows)
    cdef long long[:] r = _copy(rows)
    cdef long long[:] c = _copy(cols)
    cdef long long[:] d = _copy(bound)
    cdef Py_ssize_t it, a, b
    cdef long long t, t2, v
    cdef bint changed
    for it in range(k + 2):
        changed = False
        for a in range(k):
            for b in range(k):
                t = _fdiv(r[a] - r[b], n) + 1
                t2 = _fdiv(c[a] - c[b], n) + 1
                if t2 > t:
                    t = t2
                v = d[b] + t * m - 1
                if v < d[a]:
                    d[a] = v
                    changed = True
        if not changed:
            return [d[a] for a in range(k)]
    return None


def stream_bounds(rows, cols, srows, scols, long long n):
    cdef Py_ssize_t m = len(srows)
    cdef Py_ssize_t k = len(rows)
    cdef long long[:] r = _copy(rows)
    cdef long long[:] c = _copy(cols)
    cdef long long[:] sr = _copy(srows)
    cdef long long[:] sc = _copy(scols)
    cdef Py_ssize_t a, t
    cdef long long q, q2, v, best
    out = []
    for a in range(k):
        best = C_NEG_INF
        for t in range(m):
            q = _fdiv(r[a] - sr[t] - 1, n)
            q2 = _fdiv(c[a] - sc[t] - 1, n)
            if q2 < q:
                q = q2
            v = t + 1 + q * m
            if v > best:
                best = v
        out.append(best)
    return out


def _copy(values):
    import array
    buf = array.array("q", values)
    if not len(buf):
        buf.append(0)
    return buf
