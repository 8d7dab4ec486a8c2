import pytest
from hypothesis import given, settings

from affknuth.ambc import (
    Triple,
    backward_step,
    block_diagonal_sum,
    channel_density,
    channel_numbering,
    forward_step,
    phi,
    psi,
    southwest_channel,
    southwest_numbering,
    zigzag_decomposition,
)
from affknuth.errors import EmptyPermutation, SharedRowOrColumn, ShapeMismatch, ValidationError
from affknuth.lattice import Cell
from affknuth.oracle import brute_southwest_channel
from affknuth.perm import AffinePermutation, PartialPermutation
from affknuth.stream import Stream, dominant_representative, is_dominant, make_stream
from affknuth.tabloid import Tabloid

from conftest import affine_perms, random_perm

A = AffinePermutation.parse
T = Tabloid.from_rows
FIG1 = A("[4,1,6,11,2,3]")
GOLDEN = A("[1,2,17,5,14,18,20]")
GOLDEN_TRIPLE = Triple(T(7, [[1, 2, 5], [4, 6, 7], [3]]), T(7, [[3, 6, 7], [2, 4, 5], [1]]), (3, 3, 1))


def _is_proper(w, d) -> bool:
    n, m = w.n, d.m
    balls = list(w.balls())
    reach = (max(b.col for b in balls) - min(b.col for b in balls)) // n + 2
    for b in balls:
        here = d.label(b)
        if d.label(Cell(b.row + n, b.col + n)) != here + m:
            return False
        preds = [Cell(a.row + k * n, a.col + k * n) for a in balls for k in range(-reach, 1)]
        preds = [a for a in preds if a.row < b.row and a.col < b.col]
        if any(d.label(a) >= here for a in preds):
            return False
        if not any(d.label(a) == here - 1 for a in preds):
            return False
    return True


def test_channel_examples():
    assert channel_density(FIG1) == 3
    assert southwest_channel(FIG1) == (Cell(2, 1), Cell(5, 2), Cell(6, 3))
    ident = AffinePermutation.identity(5)
    assert channel_density(ident) == 5
    assert southwest_channel(ident) == tuple(ident.balls())
    s = make_stream({1, 3, 6}, {2, 4, 5}, 1, 6)
    w = PartialPermutation.from_balls(6, s.cells)
    assert set(southwest_channel(w)) == set(s.cells)


def test_empty_permutation_has_no_channel():
    with pytest.raises(EmptyPermutation):
        channel_density(PartialPermutation.empty(3))


def test_fig1_numbering_is_proper_with_period_three():
    d = southwest_numbering(FIG1)
    assert d.m == 3 and _is_proper(FIG1, d)
    labels = sorted(d.label(c) for c in southwest_channel(FIG1))
    assert labels == [1, 2, 3]


def test_identity_numbering_counts_up_the_diagonal():
    w = AffinePermutation.identity(4)
    d = channel_numbering(w, southwest_channel(w))
    assert [d.label(Cell(i, i)) for i in range(-3, 9)] == list(range(-3, 9))


def test_golden_numbering_is_proper():
    d = southwest_numbering(GOLDEN)
    assert _is_proper(GOLDEN, d)


@settings(max_examples=150)
@given(affine_perms(max_n=7))
def test_southwest_channel_matches_brute_force(w):
    assert southwest_channel(w) == brute_southwest_channel(w)
    assert _is_proper(w, southwest_numbering(w))


@settings(max_examples=100)
@given(affine_perms(max_n=7))
def test_zigzags_do_not_depend_on_the_anchor(w):
    d = southwest_numbering(w)
    base = zigzag_decomposition(w, d)
    backs = Stream(w.n, tuple(z.back for z in base))
    outers = PartialPermutation.from_balls(w.n, [c for z in base for c in z.outer])
    for k in (-5, -1, 2, 7):
        zz = zigzag_decomposition(w, d.shifted(k))
        assert len(zz) == d.m
        assert Stream(w.n, tuple(z.back for z in zz)) == backs
        assert PartialPermutation.from_balls(w.n, [c for z in zz for c in z.outer]) == outers


def test_single_ball_labels_give_degenerate_zigzags():
    w = AffinePermutation.identity(3)
    for z in zigzag_decomposition(w, southwest_numbering(w)):
        assert z.inner == (z.back,) and z.outer == ()


def test_forward_step_examples():
    stream, rest = forward_step(GOLDEN)
    data = stream.data()
    assert (set(data.rows), set(data.cols), data.altitude) == ({3, 6, 7}, {1, 2, 5}, 3)
    stream2, _ = forward_step(rest)
    data2 = stream2.data()
    assert (set(data2.rows), set(data2.cols), data2.altitude) == ({2, 4, 5}, {4, 6, 7}, 3)
    s, rest = forward_step(AffinePermutation.identity(4))
    assert s.cells == tuple(Cell(i, i) for i in range(1, 5)) and len(rest) == 0


def test_phi_examples():
    assert phi(GOLDEN) == GOLDEN_TRIPLE
    row = T(6, [[1, 2, 3], [4, 5], [6]])
    assert phi(A("[1,4,6,2,5,3]")) == Triple(row, row, (0, 0, 0))
    for n in range(1, 6):
        one = T(n, [list(range(1, n + 1))])
        assert phi(AffinePermutation.identity(n)) == Triple(one, one, (0,))


def test_backward_step_examples():
    s = Stream(7, (Cell(1, 10),))
    assert backward_step(PartialPermutation.empty(7), s).balls() == [Cell(1, 10)]
    diag = make_stream(range(1, 5), range(1, 5), 0, 4)
    assert backward_step(PartialPermutation.empty(4), diag).to_affine() == AffinePermutation.identity(4)
    with pytest.raises(SharedRowOrColumn):
        backward_step(PartialPermutation.from_mapping(4, {1: 1}), diag)


def test_psi_examples():
    assert psi(GOLDEN_TRIPLE) == GOLDEN
    for n in range(1, 6):
        one = T(n, [list(range(1, n + 1))])
        assert psi(Triple(one, one, (1,))) == AffinePermutation(n, tuple(range(2, n + 2)))


def test_psi_of_non_dominant_weight_lands_on_representative():
    p, q = T(4, [[1, 3], [2], [4]]), T(4, [[1, 4], [2], [3]])
    assert phi(psi(Triple(p, q, (0, 0, -1)))) == Triple(p, q, (0, -1, 0))


def test_psi_fibres_collapse_to_dominant_representative(rng):
    for _ in range(300):
        t = phi(random_perm(rng, rng.randint(1, 8), band=3))
        rho = tuple(rng.randint(-3, 3) for _ in t.rho)
        expect = Triple(t.P, t.Q, dominant_representative(t.P, t.Q, rho))
        assert phi(psi(Triple(t.P, t.Q, rho))) == expect


@settings(max_examples=200)
@given(affine_perms(max_n=8, band=3))
def test_round_trip_and_identities(w):
    t = phi(w)
    assert is_dominant(t.P, t.Q, t.rho)
    assert psi(t) == w
    assert w.shift_sum() == w.n * sum(t.rho)
    assert block_diagonal_sum(w) == sum(t.rho)


def test_block_diagonal_sum_examples():
    assert block_diagonal_sum(A("[7,2,4,1]")) == 1
    assert block_diagonal_sum(AffinePermutation.identity(5)) == 0
    assert block_diagonal_sum(A("[2,3,4,5]")) == 1


def test_sign_example_triple():
    t = phi(A("[7,2,4,1]"))
    assert t == Triple(T(4, [[1, 4], [2], [3]]), T(4, [[1, 3], [2], [4]]), (0, 0, 1))


def test_triple_json_round_trip():
    data = GOLDEN_TRIPLE.to_json()
    assert data == {"n": 7, "P": [[1, 2, 5], [4, 6, 7], [3]], "Q": [[3, 6, 7], [2, 4, 5], [1]], "rho": [3, 3, 1]}
    assert Triple.from_json(data) == GOLDEN_TRIPLE
    with pytest.raises(ValidationError):
        Triple.from_json({"n": 7, "P": [[1]]})
    with pytest.raises(ShapeMismatch):
        Triple.from_json({**data, "rho": [1, 2]})
