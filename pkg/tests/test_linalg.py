import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rgsskit.field import build_extension
from rgsskit.linalg import (
    BasisSet,
    Mat,
    change_of_basis,
    complete_basis,
    rank,
    rank_weight,
    right_kernel,
    rref,
)
from rgsskit.prng import SplitMix64, random_independent


def random_basis(ctx, rng):
    return BasisSet(ctx, random_independent(rng, ctx, ctx.m))


def test_rref_identity(F2):
    I = Mat.identity(F2, 3, base=True)
    R, rk, piv = rref(I)
    assert R == I and rk == 3 and piv == [0, 1, 2]


def test_rref_repeated_row(F8):
    M = Mat.of(F8, [[1, 1], [1, 1]], base=True)
    R, rk, piv = rref(M)
    assert R.rows == ((1, 1), (0, 0)) and rk == 1 and piv == [0]


def test_rref_ext_rank_one(F8):
    a = F8.alpha
    M = Mat.of(F8, [[a, 1], [F8.mul(a, a), a]])
    assert rank(M) == 1


def test_right_kernel_examples(F8):
    assert right_kernel(Mat.identity(F8, 2, base=True)).nrows == 0
    assert right_kernel(Mat.of(F8, [[1, 1]], base=True)).rows == ((1, 1),)
    G = Mat.of(F8, [[1, 2, 4], [1, 4, 6]])
    K = right_kernel(G)
    assert K.nrows == 1
    assert all(F8.dot(r, K.rows[0]) == 0 for r in G.rows)


@settings(max_examples=60)
@given(st.integers(0, 2**32), st.integers(1, 5), st.integers(1, 6))
def test_right_kernel_annihilates_full_rank(seed, r, c):
    F = build_extension(3, 2)
    rng = random.Random(seed)
    M = Mat.of(F, [[rng.randrange(F.order) for _ in range(c)] for _ in range(r)])
    K = right_kernel(M)
    assert K.nrows == c - rank(M)
    assert rank(K) == K.nrows
    for v in K.rows:
        assert all(F.dot(row, v) == 0 for row in M.rows)


def test_rank_weight_examples(F8):
    assert rank_weight(F8, (0, 0, 0)) == 0
    assert rank_weight(F8, (1, 1, 1)) == 1
    assert rank_weight(F8, (1, 2, 4)) == 3


@settings(max_examples=40)
@given(st.integers(0, 2**32))
def test_rank_weight_basis_invariant_and_metric(seed):
    F = build_extension(2, 4)
    rng = SplitMix64(seed)
    B1, B2 = random_basis(F, rng), random_basis(F, rng)
    x = [rng.below(F.order) for _ in range(5)]
    y = [rng.below(F.order) for _ in range(5)]
    w = rank_weight(F, x, B1)
    assert w == rank_weight(F, x, B2) == rank_weight(F, x)
    assert w <= min(F.m, len(x))
    xy = [F.add(a, b) for a, b in zip(x, y)]
    assert rank_weight(F, xy) <= rank_weight(F, x) + rank_weight(F, y)


def test_complete_basis(F8):
    assert complete_basis(BasisSet(F8, (2,))).elements == (2, 1, 4)
    full = BasisSet(F8, (3, 5, 4))
    assert complete_basis(full) is full
    with pytest.raises(ValueError, match="dependent family"):
        BasisSet(F8, (1, 1))


def test_change_of_basis_examples(F8):
    std = BasisSet.standard(F8)
    assert change_of_basis(F8, std, std) == Mat.identity(F8, 3, base=True)
    swapped = BasisSet(F8, (2, 1, 4))
    assert change_of_basis(F8, std, swapped).rows == ((0, 1, 0), (1, 0, 0), (0, 0, 1))
    other = BasisSet(F8, (1, 3, 4))
    Q = change_of_basis(F8, std, other)
    rng = random.Random(3)
    for _ in range(20):
        a = rng.randrange(8)
        assert Q.vecmul(std.coords(a)) == other.coords(a)


@settings(max_examples=30)
@given(st.integers(0, 2**32))
def test_change_of_basis_inverse_pair(seed):
    F = build_extension(3, 2)
    rng = SplitMix64(seed)
    B1, B2 = random_basis(F, rng), random_basis(F, rng)
    prod = change_of_basis(F, B1, B2) @ change_of_basis(F, B2, B1)
    assert prod == Mat.identity(F, 2, base=True)


def test_partial_basis_membership(F16):
    D = BasisSet(F16, (1, 2))
    assert D.contains(3) and not D.contains(4)
    assert D.span_coords(3) == (1, 1)
    with pytest.raises(ValueError):
        D.span_coords(4)


def test_inverse(F9):
    M = Mat.of(F9, [[1, 2], [3, 4]])
    assert M @ M.inverse() == Mat.identity(F9, 2)
    with pytest.raises(ValueError, match="singular"):
        Mat.of(F9, [[1, 1], [1, 1]]).inverse()
