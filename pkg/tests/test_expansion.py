import itertools

import pytest

from rgsskit.codes import LinearCode
from rgsskit.expansion import (
    BasisFamily,
    basis_change_blockdiag,
    expand_generator,
    expand_parity,
    expand_vector,
    mul_map_matrix,
    unexpand_vector,
)
from rgsskit.gabidulin import GabidulinParams, gab_code
from rgsskit.linalg import BasisSet, Mat, change_of_basis, rank, rank_weight, row_space_equal
from rgsskit.oracle import enumerate_code, enumerate_span
from rgsskit.prng import SplitMix64, random_independent


def test_expand_vector_examples(F8):
    std = BasisSet.standard(F8)
    assert expand_vector(BasisFamily.uniform(F8, 2), (0, 0)) == (0,) * 6
    assert expand_vector(BasisFamily(F8, (std,), std), (3,)) == (1, 1, 0)
    perm = BasisSet(F8, (2, 1, 4))
    fam = BasisFamily(F8, (std, perm), std)
    assert expand_vector(fam, (3, 3)) == (1, 1, 0, 1, 1, 0)
    assert expand_vector(fam, (2, 2)) == (0, 1, 0, 1, 0, 0)
    assert unexpand_vector(fam, expand_vector(fam, (5, 6))) == (5, 6)


def test_mul_map_examples(F8):
    std = BasisSet.standard(F8)
    assert mul_map_matrix(F8, 1, std, std) == Mat.identity(F8, 3, base=True)
    assert mul_map_matrix(F8, 0, std, std) == Mat.zeros(F8, 3, 3, base=True)
    # 1*a = a, a*a = a^2, a^2*a = a + 1
    assert mul_map_matrix(F8, 2, std, std).rows == ((0, 1, 0), (0, 0, 1), (1, 1, 0))


def test_mul_map_action(F16):
    rng = SplitMix64(4)
    B = BasisSet(F16, random_independent(rng, F16, 4))
    Bj = BasisSet(F16, random_independent(rng, F16, 4))
    for a in (1, 5, 11):
        M = mul_map_matrix(F16, a, B, Bj)
        for x in range(16):
            assert M.vecmul(B.coords(x)) == Bj.coords(F16.mul(x, a))


def test_expand_generator_examples(F8):
    one = LinearCode(Mat.of(F8, [[1]]))
    E = expand_generator(one, BasisFamily.uniform(F8, 1))
    assert E.code.generator == Mat.identity(F8, 3, base=True)

    P = GabidulinParams(F8, (1, 2, 4), 1)
    G = expand_generator(gab_code(P), BasisFamily.uniform(F8, 3)).code.generator
    assert G.rows == (
        (1, 0, 0, 0, 1, 0, 0, 0, 1),
        (0, 1, 0, 0, 0, 1, 1, 1, 0),
        (0, 0, 1, 1, 1, 0, 0, 1, 1),
    )


def _family(ctx, n, seed):
    rng = SplitMix64(seed)
    bases = tuple(BasisSet(ctx, random_independent(rng, ctx, ctx.m)) for _ in range(n))
    return BasisFamily(ctx, bases, BasisSet(ctx, random_independent(rng, ctx, ctx.m)))


@pytest.mark.parametrize("seed", range(6))
def test_expanded_span_equals_expanded_codewords(F8, seed):
    rng = SplitMix64(100 + seed)
    n = 2 + seed % 2
    rows = [[rng.below(8) for _ in range(n)]]
    C = LinearCode.span(Mat.of(F8, rows))
    fam = _family(F8, n, seed)
    E = expand_generator(C, fam)
    assert E.code.dimension == F8.m * C.dimension
    images = {expand_vector(fam, c) for c in enumerate_code(C)}
    span = set(enumerate_span(F8.prime_field, E.code.generator.rows, F8.m * n))
    assert images == span


def test_prop6_block_structure(F16):
    rng = SplitMix64(8)
    P = GabidulinParams(F16, random_independent(rng, F16, 3), 2)
    fam = _family(F16, 3, 8)
    G = expand_generator(gab_code(P), fam).code.generator
    m = F16.m
    for i in range(P.k):
        for j in range(P.n):
            block = Mat(F16, tuple(r[j * m : (j + 1) * m] for r in G.rows[i * m : (i + 1) * m]), m, True)
            assert block == mul_map_matrix(F16, F16.frob(P.g[j], i), fam.ref, fam.bases[j])


def test_basis_change_blockdiag(F8):
    I = Mat.identity(F8, 3, base=True)
    assert basis_change_blockdiag([I, I]) == Mat.identity(F8, 6, base=True)
    std = BasisSet.standard(F8)
    perm = change_of_basis(F8, std, BasisSet(F8, (2, 1, 4)))
    D = basis_change_blockdiag([perm, I])
    assert D.rows[0] == (0, 1, 0, 0, 0, 0) and D.rows[3] == (0, 0, 0, 1, 0, 0)
    D2 = basis_change_blockdiag([perm, I], inverse_transpose=True)
    assert D2 == D  # a permutation is its own inverse transpose here


@pytest.mark.parametrize("seed", range(5))
def test_theorem_block_identity(F16, seed):
    rng = SplitMix64(seed)
    n = 3
    P = GabidulinParams(F16, random_independent(rng, F16, n), 1 + seed % 2)
    C = gab_code(P)
    B = BasisSet.standard(F16)
    Bjs = tuple(BasisSet(F16, random_independent(rng, F16, 4)) for _ in range(n))
    Qs = [change_of_basis(F16, B, Bj) for Bj in Bjs]
    G_B = expand_generator(C, BasisFamily.uniform(F16, n, B)).code.generator
    G_changed = expand_generator(C, BasisFamily(F16, Bjs, B)).code.generator
    assert G_B @ basis_change_blockdiag(Qs) == G_changed
    H_B = expand_parity(C, BasisFamily.uniform(F16, n, B))
    H_changed = H_B @ basis_change_blockdiag(Qs, inverse_transpose=True)
    assert row_space_equal(H_changed, expand_parity(C, BasisFamily(F16, Bjs, B)))


def test_expand_parity_examples(F8):
    full = LinearCode(Mat.identity(F8, 2))
    assert expand_parity(full, BasisFamily.uniform(F8, 2)).nrows == 0
    rep = LinearCode(Mat.of(F8, [[1, 3]]))
    fam = BasisFamily.uniform(F8, 2)
    H = expand_parity(rep, fam)
    assert H.shape == (3, 6)
    assert rank(H) == 3
    for c in enumerate_code(rep):
        v = expand_vector(fam, c)
        assert all(F8.prime_field.dot(h, v) == 0 for h in H.rows)


def test_rank_weight_from_expansion(F16):
    rng = SplitMix64(2)
    fam = BasisFamily.uniform(F16, 5)
    for _ in range(30):
        x = [rng.below(16) for _ in range(5)]
        v = expand_vector(fam, x)
        cols = [v[j * 4 : (j + 1) * 4] for j in range(5)]
        assert rank(Mat(F16, tuple(map(tuple, cols)), 4, True)) == rank_weight(F16, x)


def test_expansion_is_fq_linear(F9):
    fam = _family(F9, 2, 1)
    for x, y in itertools.product(itertools.product(range(0, 9, 4), repeat=2), repeat=2):
        s = tuple(F9.add(a, b) for a, b in zip(x, y))
        lhs = expand_vector(fam, s)
        rhs = tuple((a + b) % 3 for a, b in zip(expand_vector(fam, x), expand_vector(fam, y)))
        assert lhs == rhs
        assert expand_vector(fam, tuple(F9.scale(2, a) for a in x)) == tuple(
            (2 * a) % 3 for a in expand_vector(fam, x)
        )
