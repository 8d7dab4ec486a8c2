import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from affknuth.lattice import Cell, block_diagonal, compare, residue, translate

cells = st.builds(Cell, st.integers(-30, 30), st.integers(-30, 30))
DIRS = ["N", "S", "E", "W", "NE", "NW", "SE", "SW"]


@pytest.mark.parametrize("n, cell, expected", [(7, (1, 10), 1), (6, (3, 3), 0), (4, (5, 1), -1)])
def test_block_diagonal_examples(n, cell, expected):
    assert block_diagonal(Cell(*cell), n) == expected


@given(cells, st.integers(1, 9), st.integers(-5, 5))
def test_block_diagonal_translation_invariant(c, n, k):
    assert block_diagonal(translate(c, k, n), n) == block_diagonal(c, n)


def test_compare_examples():
    assert compare(Cell(2, 5), Cell(2, 3), "E")
    assert compare(Cell(1, 1), Cell(1, 1), "SW")
    assert not compare(Cell(1, 1), Cell(1, 1), "SW", strict=True)


def test_compare_rejects_unknown_direction():
    with pytest.raises(ValueError):
        compare(Cell(0, 0), Cell(1, 1), "Q")


@given(cells, cells)
def test_sw_is_reverse_of_ne(a, b):
    assert compare(a, b, "SW") == compare(b, a, "NE")


@given(cells, cells, cells)
def test_compare_transitive(a, b, c):
    for d in DIRS:
        for strict in (False, True):
            if compare(a, b, d, strict) and compare(b, c, d, strict):
                assert compare(a, c, d, strict)


def test_strict_antisymmetric_on_small_grid():
    grid = [Cell(r, c) for r, c in itertools.product(range(3), repeat=2)]
    for a, b in itertools.product(grid, repeat=2):
        for d in DIRS:
            assert not (compare(a, b, d, True) and compare(b, a, d, True))


def test_residue_representatives():
    assert [residue(x, 4) for x in (-4, 0, 1, 4, 5, 9)] == [4, 4, 1, 4, 1, 1]
