import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affknuth.errors import DuplicateResidue, IncompleteTabloid, ShapeMismatch, ValidationError
from affknuth.tabloid import (
    Partition,
    Tabloid,
    charge,
    charge_matching,
    column_superstandard,
    column_superstandard_tableau,
    d_lambda,
    local_charge,
    partitions,
    reverse_row_superstandard,
    shape_inversions,
    superstandard,
    weight_inversions,
)

from conftest import random_partition, random_tabloid

T = Tabloid.from_rows
TAU_EXAMPLE = T(9, [[2, 9, 5], [8, 7, 6], [3, 1], [4]])
CHARGE_EXAMPLE = T(10, [[2, 4, 6, 10], [3, 7, 8], [1, 5, 9]])


def test_partition_basics():
    lam = Partition((4, 3, 2, 2))
    assert lam.size == 11
    assert lam.conjugate == (4, 4, 2, 1)
    assert [list(b) for b in lam.blocks()] == [[0], [1], [2, 3]]
    with pytest.raises(ValidationError):
        Partition((1, 2))


def test_partition_counts():
    assert [len(list(partitions(n))) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_tabloid_validation():
    with pytest.raises(DuplicateResidue):
        T(3, [[1, 2], [2]])
    with pytest.raises(ValidationError):
        T(3, [[1], [2, 3]])
    with pytest.raises(ValidationError):
        T(3, [[1, 4]])


def test_tau_examples():
    assert TAU_EXAMPLE.tau() == {2, 3, 5, 9}
    assert T(5, [[1, 2, 3, 4, 5]]).tau() == frozenset()
    assert T(5, [[1], [2], [3], [4], [5]]).tau() == {1, 2, 3, 4}


def test_tau_needs_complete_tabloid():
    with pytest.raises(IncompleteTabloid):
        T(4, [[1, 2], [3]]).tau()


def test_tabloid_knuth_move_examples():
    assert TAU_EXAMPLE.knuth_move(9) == T(9, [[2, 1, 5], [8, 7, 6], [3, 9], [4]])
    assert TAU_EXAMPLE.knuth_move(7) is None  # 7 and 8 share a row


@settings(max_examples=100)
@given(st.integers(3, 8), st.randoms(use_true_random=False))
def test_tabloid_knuth_move_is_involution(n, rnd):
    t = random_tabloid(rnd, random_partition(rnd, n))
    for i, u in t.knuth_neighbors():
        assert u.knuth_move(i) == t
        assert not (t.tau() <= u.tau() or u.tau() <= t.tau())


def test_superstandard_examples():
    assert column_superstandard((3, 2, 1), 1) == T(6, [[1, 4, 6], [2, 5], [3]])
    assert column_superstandard((3, 2, 1), 3) == T(6, [[3, 6, 2], [4, 1], [5]])
    assert reverse_row_superstandard((3, 2, 1), 1) == T(6, [[4, 5, 6], [2, 3], [1]])
    assert superstandard("column", (1, 1, 1, 1), 1) == T(4, [[1], [2], [3], [4]])
    assert column_superstandard_tableau((3, 2, 1), 1).column(0) == [1, 2, 3]
    with pytest.raises(ValidationError):
        superstandard("diagonal", (2, 1), 1)


def test_charge_matching_examples():
    assert charge_matching([3, 7, 8], [1, 5, 9]) == {3: 5, 7: 9, 8: 1}
    assert charge_matching([3, 7, 8], [1, 5, 9], order=[8, 7, 3]) == {8: 9, 7: 1, 3: 5}
    assert charge_matching([1], [2]) == {1: 2}


def test_local_charge_examples():
    assert local_charge(CHARGE_EXAMPLE, 2) == 1
    assert local_charge(CHARGE_EXAMPLE, 2, order=[8, 7, 3]) == 1
    assert local_charge(CHARGE_EXAMPLE, 1) == 0  # unequal rows
    assert local_charge(T(2, [[1], [2]]), 1) == 0


@settings(max_examples=150)
@given(st.integers(2, 9), st.randoms(use_true_random=False))
def test_local_charge_ignores_activation_order(n, rnd):
    t = random_tabloid(rnd, random_partition(rnd, n))
    for k in range(1, len(t.rows)):
        if len(t.rows[k - 1]) != len(t.rows[k]):
            continue
        order = list(t.rows[k - 1])
        rnd.shuffle(order)
        assert local_charge(t, k, order) == local_charge(t, k)


def test_charge_examples():
    for shape in [(3, 2, 1), (2, 2), (4, 4, 1), (1, 1, 1)]:
        assert charge(column_superstandard(shape, 1)) == 0
    assert charge(T(4, [[1, 2, 3, 4]])) == 0
    assert charge(T(2, [[2], [1]])) == 1


def test_inversion_statistics_examples():
    assert T(4, [[1, 4], [2], [3]]).inversions() == 2
    assert T(4, [[1, 3], [2], [4]]).inversions() == 1
    assert shape_inversions((2, 1, 1)) == 1
    assert weight_inversions((2, 1, 1), (0, 0, 1)) == 1
    assert T(4, [[1, 2, 3, 4]]).inversions() == 0
    assert weight_inversions((4, 2, 2), (5, -3, 7)) == 0
    with pytest.raises(ShapeMismatch):
        weight_inversions((2, 1), (0,))


def test_d_lambda_examples():
    assert d_lambda((3, 2, 1)) == 1
    assert d_lambda((2, 2)) == 2
    assert d_lambda((5,)) == 1
    assert d_lambda((3, 3, 2, 2, 2, 1)) == 1


def test_charge_of_shifted_superstandard_drops_by_one():
    for n in range(1, 9):
        for lam in partitions(n):
            d = d_lambda(lam)
            for s in range(1, n + 1):
                a = charge(column_superstandard(lam, s))
                b = charge(column_superstandard(lam, s + 1))
                assert (b - a + 1) % d == 0


def test_knuth_moves_preserve_charge_class(rng):
    for _ in range(300):
        n = rng.randint(3, 9)
        t = random_tabloid(rng, random_partition(rng, n))
        d = d_lambda(t.shape)
        for _, u in t.knuth_neighbors():
            assert (charge(u) - charge(t)) % d == 0


def test_json_round_trip():
    data = TAU_EXAMPLE.to_json()
    assert data == {"shape": [3, 3, 2, 1], "rows": [[2, 5, 9], [6, 7, 8], [1, 3], [4]]}
    assert Tabloid.from_json(9, data) == TAU_EXAMPLE
    with pytest.raises(ShapeMismatch):
        Tabloid.from_json(9, {"shape": [3, 3, 3], "rows": data["rows"]})


# The window-shift identity for longest increasing matchings, used only here to
# validate local charge: ell(A, B) is the largest number of a's (taken in
# order) that can be matched to larger b's at increasing positions.


def increasing_match_length(a: list[int], b: list[int]) -> int:
    a, b = sorted(a), sorted(b)
    for size in range(len(a), -1, -1):
        for idx in itertools.combinations(range(len(b)), size):
            if all(a[t] < b[i] for t, i in enumerate(idx)):
                return size
    return 0


def test_window_shift_adds_one_match():
    rnd = random.Random(7)
    for _ in range(300):
        m = rnd.randint(1, 5)
        a = sorted(rnd.sample(range(1, 15), m))
        b = sorted(rnd.sample(range(1, 15), m))
        ell = increasing_match_length(a, b)
        if ell < m:
            b2 = b[1:] + [max(a[-1], b[-1]) + rnd.randint(1, 3)]
            assert increasing_match_length(a, b2) == ell + 1


def test_local_charge_counts_unmatched_positions():
    rnd = random.Random(11)
    for _ in range(300):
        m = rnd.randint(1, 5)
        n = 2 * m + rnd.randint(0, 3)
        xs = rnd.sample(range(1, n + 1), 2 * m)
        top, bottom = xs[:m], xs[m:]
        rest = [x for x in range(1, n + 1) if x not in xs]
        rows = [top, bottom] + ([rest] if rest else [])
        if rest and len(rest) > m:
            continue
        t = Tabloid.from_rows(n, rows)
        assert local_charge(t, 1) == m - increasing_match_length(top, bottom)
