import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewcodes import skewmat
from skewcodes.errors import BudgetExceeded, DimensionMismatch, IndexOutOfRange, RankTooLarge
from skewcodes.field import gauss_rank, make_field
from skewcodes.skewmat import (
    SkewMatrix,
    batch_rank,
    congruence_normal_form,
    congruent,
    elementary,
    enumerate_all,
    full_trace,
    random_of_rank,
    rank,
    standard_form,
    trace_pair,
)


def test_pair_order():
    assert skewmat.pairs(4) == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    m = 6
    for pos, (i, j) in enumerate(skewmat.pairs(m)):
        assert skewmat.pair_index(m, i + 1, j + 1) == pos


def test_entries_length_checked(gf3):
    with pytest.raises(DimensionMismatch):
        SkewMatrix(gf3, 3, (0, 0))


def test_full_is_skew(gf5):
    a = SkewMatrix(gf5, 3, (1, 2, 3))
    full = a.full()
    assert full.tolist() == [[0, 1, 2], [4, 0, 3], [3, 2, 0]]
    assert a[2, 1] == 4 and a[1, 1] == 0
    assert SkewMatrix.from_full(gf5, full) == a


def test_elementary(gf3):
    e = elementary(gf3, 4, 1, 2)
    assert e.entries == (1, 0, 0, 0, 0, 0)
    assert rank(elementary(gf3, 5, 2, 4)) == 2
    with pytest.raises(IndexOutOfRange):
        elementary(gf3, 3, 2, 2)
    with pytest.raises(IndexOutOfRange):
        elementary(gf3, 3, 1, 4)


def test_standard_form(gf3):
    e4 = standard_form(gf3, 4, 2)
    assert e4.full().tolist() == [[0, 1, 0, 0], [2, 0, 0, 0], [0, 0, 0, 1], [0, 0, 2, 0]]
    assert rank(e4) == 4
    assert standard_form(gf3, 5, 0).is_zero()
    e = standard_form(gf3, 3, 1)
    assert e.entries == (1, 0, 0) and rank(e) == 2
    with pytest.raises(RankTooLarge):
        standard_form(gf3, 3, 2)


def test_rank_examples(gf3):
    assert rank(SkewMatrix.zero(gf3, 5)) == 0
    assert rank(standard_form(gf3, 6, 3)) == 6
    a = SkewMatrix(gf3, 4, (1, 1, 0, 1, 0, 0))  # a12 = a13 = a23 = 1
    assert rank(a) == 2


def test_trace_pair_examples(gf3):
    e = standard_form(gf3, 2, 1)
    assert trace_pair(e, e) == 1
    assert trace_pair(elementary(gf3, 4, 1, 2), elementary(gf3, 4, 3, 4)) == 0
    assert trace_pair(elementary(gf3, 4, 1, 2), elementary(gf3, 4, 1, 2)) == 1
    with pytest.raises(DimensionMismatch):
        trace_pair(e, standard_form(gf3, 3, 1))


def test_trace_shortcut_exhaustive(gf3):
    # every pair of 3x3 matrices, plus every 4x4 matrix against a fixed spread of F
    mats3 = list(enumerate_all(gf3, 3))
    for f in mats3:
        for a in mats3:
            assert trace_pair(f, a) == full_trace(gf3, f.full(), a.full())
    mats4 = list(enumerate_all(gf3, 4))
    for f in mats4[::37]:
        for a in mats4:
            assert trace_pair(f, a) == full_trace(gf3, f.full(), a.full())


@pytest.mark.parametrize("p,k", [(5, 1), (7, 1), (3, 2)])
def test_trace_shortcut_random(p, k):
    field = make_field(p, k)
    rng = np.random.default_rng(11)
    for _ in range(200):
        m = int(rng.integers(2, 8))
        f = skewmat.random_skew(field, m, rng)
        a = skewmat.random_skew(field, m, rng)
        assert trace_pair(f, a) == full_trace(field, f.full(), a.full())


def test_enumerate_all(gf3):
    assert [a.entries for a in enumerate_all(gf3, 2)] == [(0,), (1,), (2,)]
    mats = list(enumerate_all(gf3, 4))
    assert len(mats) == 729
    assert [a.index() for a in mats] == list(range(729))
    with pytest.raises(BudgetExceeded):
        next(enumerate_all(gf3, 7))


def test_enumerate_subranges_partition(gf3):
    whole = [a.entries for a in enumerate_all(gf3, 4)]
    parts = []
    for lo, hi in skewmat.index_ranges(729, 5):
        parts += [a.entries for a in enumerate_all(gf3, 4, lo, hi)]
    assert parts == whole


def test_rank_histogram_m4(gf3):
    hist = {}
    for a in enumerate_all(gf3, 4):
        r = rank(a)
        hist[r] = hist.get(r, 0) + 1
    assert hist == {0: 1, 2: 260, 4: 468}


@pytest.mark.parametrize("p,k,m", [(3, 1, 4), (3, 1, 5), (5, 1, 4), (3, 2, 3)])
def test_batch_rank_matches_scalar(p, k, m):
    field = make_field(p, k)
    total = skewmat.count_all(field, m)
    idx = np.unique(np.random.default_rng(0).integers(0, total, 400))
    ranks = batch_rank(field, skewmat.decode(field, m, idx), m)
    assert ranks.tolist() == [rank(skewmat.from_index(field, m, int(i))) for i in idx]
    assert not (ranks % 2).any()


@pytest.mark.parametrize("m,k", [(2, 1), (4, 1), (4, 2), (5, 0), (6, 3)])
def test_normal_form_of_standard(gf3, m, k):
    f = standard_form(gf3, m, k)
    l, kk = congruence_normal_form(f)
    assert kk == k
    assert congruent(l, f) == f


def test_normal_form_scaled_elementary(gf3):
    f = elementary(gf3, 2, 1, 2).scale(2)
    l, k = congruence_normal_form(f)
    assert k == 1
    assert congruent(l, f) == standard_form(gf3, 2, 1)


@pytest.mark.parametrize("p,k", [(3, 1), (5, 1), (3, 2)])
def test_normal_form_random(p, k):
    field = make_field(p, k)
    rng = np.random.default_rng(5)
    for _ in range(60):
        m = int(rng.integers(2, 7))
        f = skewmat.random_skew(field, m, rng)
        l, kk = congruence_normal_form(f)
        assert 2 * kk == rank(f)
        assert gauss_rank(field, l) == m
        assert congruent(l, f) == standard_form(field, m, kk)
    f = random_of_rank(make_field(3), 5, 2, seed=4)
    assert congruence_normal_form(f)[1] == 2


def test_random_of_rank(gf3, gf5):
    assert random_of_rank(gf3, 4, 0, seed=1).is_zero()
    # k is half the rank, as for standard_form
    assert rank(random_of_rank(gf3, 4, 1, seed=7)) == 2
    assert rank(random_of_rank(gf3, 4, 2, seed=7)) == 4
    assert rank(random_of_rank(gf5, 5, 1, seed=1)) == 2
    assert rank(random_of_rank(gf5, 5, 2, seed=1)) == 4
    assert random_of_rank(gf5, 5, 2, seed=1) == random_of_rank(gf5, 5, 2, seed=1)
    with pytest.raises(RankTooLarge):
        random_of_rank(gf3, 3, 2, seed=0)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([(3, 1), (5, 1), (7, 1), (3, 2)]), st.integers(2, 6))
def test_trace_congruence_identity(seed, pk, m):
    # tr((L^T F L) A) = tr(F (L A L^T))
    field = make_field(*pk)
    rng = np.random.default_rng(seed)
    f = skewmat.random_skew(field, m, rng)
    a = skewmat.random_skew(field, m, rng)
    l = skewmat.random_invertible(field, m, rng)
    assert trace_pair(congruent(l.T, f), a) == trace_pair(f, congruent(l, a))
