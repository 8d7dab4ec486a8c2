import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affknuth.errors import OverlappingData, SharedRowOrColumn, SizeMismatch, UnequalRows
from affknuth.lattice import Cell, strictly_nw
from affknuth.stream import (
    Stream,
    backward_offset,
    concurrency_offset,
    dominance_constant,
    dominance_constant_by_concurrency,
    dominant_representative,
    is_concurrent,
    is_dominant,
    make_stream,
    symmetrized_offsets,
)
from affknuth.tabloid import Tabloid

from conftest import random_tabloid

T = Tabloid.from_rows
GOLDEN_P = T(7, [[1, 2, 5], [4, 6, 7], [3]])
GOLDEN_Q = T(7, [[3, 6, 7], [2, 4, 5], [1]])
SIGN_P = T(4, [[1, 4], [2], [3]])
SIGN_Q = T(4, [[1, 3], [2], [4]])


def test_make_stream_examples():
    assert make_stream({1, 3, 6}, {2, 4, 5}, 0, 6).cells == (Cell(1, 2), Cell(3, 4), Cell(6, 5))
    assert make_stream({1, 3, 6}, {2, 4, 5}, 1, 6).cells == (Cell(1, 4), Cell(3, 5), Cell(6, 8))
    assert make_stream({1}, {1}, 0, 1).cells == (Cell(1, 1),)
    with pytest.raises(SizeMismatch):
        make_stream({1, 2}, {3}, 0, 4)


def test_altitude_examples():
    assert Stream(7, (Cell(1, 10),)).altitude() == 1
    assert Stream(7, (Cell(8, 17),)).altitude() == 1
    for r in (-1, 0, 1):
        assert make_stream({1, 3, 6}, {2, 4, 5}, r, 6).altitude() == r


@settings(max_examples=200)
@given(st.integers(2, 9), st.integers(-6, 6), st.randoms(use_true_random=False))
def test_altitude_recovers_r(n, r, rnd):
    m = rnd.randint(1, n)
    a = rnd.sample(range(1, n + 1), m)
    b = rnd.sample(range(1, n + 1), m)
    s = make_stream(a, b, r, n)
    assert s.altitude() == r
    assert s.data().rows == frozenset(a) and s.data().cols == frozenset(b)
    assert make_stream(a, b, r + 1, n) != s


def test_stream_rejects_non_chain():
    with pytest.raises(ValueError):
        Stream(4, (Cell(1, 3), Cell(2, 2)))


def test_backward_offset_of_diagonal_neighbour():
    s = make_stream({1, 3}, {1, 3}, 0, 4)
    t = Stream(4, tuple(Cell(c.row + 1, c.col + 1) for c in s.cells))
    assert backward_offset(t, s) == 0


def test_backward_offset_rejects_shared_rows():
    s = make_stream({1, 3}, {1, 3}, 0, 4)
    with pytest.raises(SharedRowOrColumn):
        backward_offset(make_stream({1, 2}, {2, 4}, 0, 4), s)


def _satisfies_backward_conditions(t, s, c):
    m = t.density
    nw_all = all(strictly_nw(s.cell(i), t.cell(i, c)) for i in range(1, m + 1))
    some_gap = any(not strictly_nw(s.cell(j + 1), t.cell(j, c)) for j in range(1, m + 1))
    return nw_all and some_gap


def test_backward_numbering_is_the_unique_solution(rng):
    for _ in range(200):
        n = rng.randint(2, 9)
        m = rng.randint(1, n // 2)
        xs, ys = rng.sample(range(1, n + 1), 2 * m), rng.sample(range(1, n + 1), 2 * m)
        s = make_stream(xs[:m], ys[:m], rng.randint(-2, 2), n)
        t = make_stream(xs[m:], ys[m:], rng.randint(-2, 2), n)
        hits = [c for c in range(-4 * m - 4, 4 * m + 5) if _satisfies_backward_conditions(t, s, c)]
        assert hits == [backward_offset(t, s)]


def test_concurrency_offset_golden():
    args = (GOLDEN_Q.rows[0], GOLDEN_P.rows[0], GOLDEN_Q.rows[1], GOLDEN_P.rows[1], 7)
    r = concurrency_offset(*args)
    assert r == -2
    s = make_stream(GOLDEN_Q.rows[0], GOLDEN_P.rows[0], 0, 7)
    for other in range(-7, 8):
        if other != r:
            assert not is_concurrent(make_stream(GOLDEN_Q.rows[1], GOLDEN_P.rows[1], other, 7), s)


def test_concurrency_offset_errors():
    with pytest.raises(OverlappingData):
        concurrency_offset({1, 2}, {1, 2}, {2, 3}, {3, 4}, 5)
    with pytest.raises(SizeMismatch):
        concurrency_offset({1, 2}, {1, 2}, {3}, {3}, 5)


def test_concurrency_offset_is_antisymmetric(rng):
    for _ in range(200):
        n = rng.randint(2, 9)
        m = rng.randint(1, n // 2)
        xs, ys = rng.sample(range(1, n + 1), 2 * m), rng.sample(range(1, n + 1), 2 * m)
        a, b, a2, b2 = xs[:m], ys[:m], xs[m:], ys[m:]
        # exchanging the roles of rows and columns negates the offset
        assert concurrency_offset(a, b, a2, b2, n) == -concurrency_offset(b, a, b2, a2, n)


def test_swapping_the_two_streams_does_not_negate():
    a, b, a2, b2 = [3, 1, 6, 5], [2, 4, 5, 1], [4, 7, 8, 9], [8, 9, 7, 6]
    assert concurrency_offset(a, b, a2, b2, 9) == 0
    assert concurrency_offset(a2, b2, a, b, 9) == 1


def test_dominance_constant_examples():
    assert dominance_constant(GOLDEN_P, GOLDEN_Q, 1) == -2
    assert dominance_constant_by_concurrency(GOLDEN_P, GOLDEN_Q, 1) == -2
    assert dominance_constant(GOLDEN_P, GOLDEN_P, 1) == 0
    assert dominance_constant(SIGN_P, SIGN_Q, 2) == 0
    with pytest.raises(UnequalRows):
        dominance_constant(GOLDEN_P, GOLDEN_Q, 2)


def test_dominance_forms_agree_on_random_pairs(rng):
    for _ in range(300):
        n = rng.randint(2, 8)
        m = rng.randint(1, n // 2)
        rest = n - 2 * m
        shape = [m, m] + ([rest] if 0 < rest <= m else [1] * rest)
        p, q = random_tabloid(rng, shape), random_tabloid(rng, shape)
        assert dominance_constant(p, q, 1) == dominance_constant_by_concurrency(p, q, 1)


def test_dominance_examples():
    assert is_dominant(GOLDEN_P, GOLDEN_Q, (3, 3, 1))
    assert not is_dominant(SIGN_Q, SIGN_P, (0, 0, -1))
    assert dominant_representative(SIGN_Q, SIGN_P, (0, 0, -1)) == (0, -1, 0)


def test_dominant_representative_idempotent_and_offsets_antisymmetric(rng):
    for _ in range(200):
        n = rng.randint(2, 8)
        shape = rng.choice([(n,), (1,) * n] + ([(n // 2, n // 2)] if n % 2 == 0 else [(n // 2, n // 2, 1)]))
        p, q = random_tabloid(rng, shape), random_tabloid(rng, shape)
        rho = tuple(rng.randint(-4, 4) for _ in shape)
        rep = dominant_representative(p, q, rho)
        assert is_dominant(p, q, rep)
        assert dominant_representative(p, q, rep) == rep
        assert symmetrized_offsets(q, p) == [-x for x in symmetrized_offsets(p, q)]
