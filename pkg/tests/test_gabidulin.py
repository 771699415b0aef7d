import itertools

import pytest

from rgsskit.field import build_extension
from rgsskit.gabidulin import (
    DecodeFailure,
    GabidulinParams,
    dual_support,
    gab_code,
    gab_decode,
    gab_encode,
    moore_matrix,
)
from rgsskit.linalg import Mat, rank_weight, right_kernel, row_space_equal
from rgsskit.prng import SplitMix64, random_independent
from rgsskit.oracle import enumerate_code, nearest_codewords, oracle_min_rank_distance


def test_moore_matrix_examples(F8):
    g = (1, 2, 4)
    assert moore_matrix(F8, g, 1).rows == ((1, 2, 4),)
    assert moore_matrix(F8, g, 2).rows[1] == (1, 4, 6)
    M = moore_matrix(F8, (1, 1, 0), 3)
    assert len(set(M.rows)) == 1


def test_gab_code_generator(F8):
    P = GabidulinParams(F8, (1, 2, 4), 2)
    assert gab_code(P).generator.rows == ((1, 2, 4), (1, 4, 6))


def test_small_gab_is_mrd(F8):
    P = GabidulinParams(F8, (1, 2), 1)
    S = enumerate_code(gab_code(P))
    assert len(S) == 8
    assert oracle_min_rank_distance(F8, S) == 2


def test_invalid_params(F8):
    with pytest.raises(ValueError, match="support not independent"):
        GabidulinParams(F8, (2, 2, 4), 1)
    with pytest.raises(ValueError):
        GabidulinParams(F8, (1, 2, 4), 3)


def test_dual_support_examples(F8):
    P = GabidulinParams(F8, (1, 2), 1)
    assert dual_support(P) == (1, F8.inv(2)) == (1, 5)
    P = GabidulinParams(F8, (1, 2, 4), 2)
    K = right_kernel(moore_matrix(F8, P.g, 2))
    assert row_space_equal(K, Mat(F8, (P.h,), 3))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_dual_support_general_k(F16, k):
    P = GabidulinParams(F16, (1, 2, 4, 8), k)
    h = P.h
    assert rank_weight(F16, h) == 4
    assert h[0] == 1
    prod = P.generator @ P.parity_check.T
    assert not any(any(r) for r in prod.rows)
    # Moore(h, n-k) spans the whole dual
    assert row_space_equal(P.parity_check, right_kernel(P.generator))


def test_unshifted_kernel_vector_fails_for_small_k(F16):
    P = GabidulinParams(F16, (1, 2, 4, 8), 1)
    v = right_kernel(moore_matrix(F16, P.g, 3)).rows[0]
    prod = P.generator @ moore_matrix(F16, v, 3).T
    assert any(any(r) for r in prod.rows)


def test_encode_examples(F8):
    P = GabidulinParams(F8, (1, 2, 4), 2)
    assert gab_encode(P, (0, 0)) == (0, 0, 0)
    assert gab_encode(P, (1, 0)) == (1, 2, 4)
    assert gab_encode(P, (0, 1)) == (1, 4, 6)
    G = P.generator
    for msg in itertools.product(range(8), repeat=2):
        assert gab_encode(P, msg) == G.vecmul(msg)


def test_decode_examples(F8):
    P = GabidulinParams(F8, (1, 2, 4), 1)
    c = (1, 2, 4)
    assert gab_decode(P, c) == (c, (0, 0, 0))
    y = (0, 2, 4)  # c + (1, 0, 0)
    cc, e = gab_decode(P, y)
    assert cc == c and e == (1, 0, 0)
    S = enumerate_code(gab_code(P))
    assert nearest_codewords(F8, S, y, 1) == [c]

    P2 = GabidulinParams(F8, (1, 2, 4), 2)
    with pytest.raises(DecodeFailure):
        gab_decode(P2, (1, 0, 0))


def test_decoder_agrees_with_oracle_exhaustively_f8(F8):
    P = GabidulinParams(F8, (1, 2, 4), 1)
    S = enumerate_code(gab_code(P))
    for y in itertools.product(range(8), repeat=3):
        near = nearest_codewords(F8, S, y, P.tau_max)
        try:
            c, e = gab_decode(P, y)
        except DecodeFailure:
            assert near == []
        else:
            assert near == [c]


def test_mrd_for_several_instances():
    F = build_extension(2, 4)
    rng = SplitMix64(99)
    for n, k in [(4, 2), (3, 1), (4, 3), (2, 1)]:
        P = GabidulinParams(F, random_independent(rng, F, n), k)
        S = enumerate_code(gab_code(P))
        assert len(S) == 2 ** (F.m * k)
        assert oracle_min_rank_distance(F, S) == P.d
