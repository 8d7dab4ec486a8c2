import random

import pytest
from hypothesis import strategies as st

from affknuth.perm import AffinePermutation
from affknuth.tabloid import Partition, Tabloid


def random_perm(rng: random.Random, n: int, band: int = 2) -> AffinePermutation:
    sigma = list(range(1, n + 1))
    rng.shuffle(sigma)
    return AffinePermutation(n, tuple(s + n * rng.randint(-band, band) for s in sigma))


def random_tabloid(rng: random.Random, shape) -> Tabloid:
    parts = tuple(shape)
    n = sum(parts)
    xs = list(range(1, n + 1))
    rng.shuffle(xs)
    rows, k = [], 0
    for p in parts:
        rows.append(xs[k:k + p])
        k += p
    return Tabloid.from_rows(n, rows)


def random_partition(rng: random.Random, n: int) -> Partition:
    parts, rest = [], n
    while rest:
        p = rng.randint(1, min(rest, parts[-1] if parts else rest))
        parts.append(p)
        rest -= p
    return Partition(tuple(parts))


@st.composite
def affine_perms(draw, max_n=6, band=2):
    n = draw(st.integers(1, max_n))
    sigma = draw(st.permutations(range(1, n + 1)))
    shifts = draw(st.lists(st.integers(-band, band), min_size=n, max_size=n))
    return AffinePermutation(n, tuple(s + n * t for s, t in zip(sigma, shifts)))


@pytest.fixture
def rng():
    return random.Random(20261015)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
