import os
import random

import pytest

from affknuth import _kernels_py, kernels

compiled = pytest.importorskip("affknuth._kernels")


def random_case(rng, n):
    rows = list(range(1, n + 1))
    cols = [c + n * rng.randint(-3, 3) for c in rng.sample(range(1, n + 1), n)]
    m = max(_kernels_py.chain_lengths(rows, cols, n))
    init = [_kernels_py.NEG_INF] * n
    init[rng.randrange(n)] = rng.randint(-5, 5)
    srows = sorted(rng.sample(range(1, n + 1), m))
    scols = sorted(rng.sample(range(1, n + 1), m))
    return rows, cols, m, init, srows, scols


@pytest.mark.parametrize("seed", range(30))
def test_backends_agree(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 12)
    rows, cols, m, init, srows, scols = random_case(rng, n)
    for a in range(n):
        assert compiled.cycle_chain(rows, cols, n, a) == _kernels_py.cycle_chain(rows, cols, n, a)
    assert compiled.chain_lengths(rows, cols, n) == _kernels_py.chain_lengths(rows, cols, n)
    assert compiled.maxplus_numbering(rows, cols, n, m, init) == _kernels_py.maxplus_numbering(rows, cols, n, m, init)
    bound = _kernels_py.stream_bounds(rows, cols, srows, scols, n)
    assert compiled.stream_bounds(rows, cols, srows, scols, n) == bound
    assert compiled.minplus_numbering(rows, cols, n, m, bound) == _kernels_py.minplus_numbering(rows, cols, n, m, bound)


def test_negative_operands_floor():
    # column offsets far below zero exercise floor division
    rows, cols = [1, 2, 3], [-20, -7, 9]
    assert compiled.chain_lengths(rows, cols, 3) == _kernels_py.chain_lengths(rows, cols, 3)


def test_selected_backend():
    if os.environ.get("AFFKNUTH_PURE_PYTHON", "") not in ("", "0"):
        assert kernels.BACKEND == "python"
        assert kernels.cycle_chain is _kernels_py.cycle_chain
    else:
        assert kernels.BACKEND == "cython"
        assert kernels.cycle_chain is compiled.cycle_chain
