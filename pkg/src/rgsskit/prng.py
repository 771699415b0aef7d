"""Seeded instance generation that other implementations can reproduce.

The generator is SplitMix64 (state and output arithmetic mod 2^64):

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

``below(n)`` draws u until u < 2^64 - (2^64 mod n) and returns u mod n.
Python's ``random`` is avoided on purpose: its integer sampling is not
specified outside CPython.

Draw order for a seeded instance: the Gabidulin support first (if any),
then one subspace per position in order 1..n.  Each independent family is
drawn greedily: candidates ``1 + below(q^m - 1)`` are kept when they raise
the F_q-rank of the family so far.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .codes import LinearCode
from .field import FieldCtx, build_extension
from .gabidulin import GabidulinParams, gab_code
from .linalg import Mat, rank
from .rgss import SubspaceFamily

__all__ = ["Instance", "SplitMix64", "random_chain", "random_instance", "random_independent", "random_subspaces"]

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n


def _digit_rank(ctx: FieldCtx, elems: Sequence[int]) -> int:
    q = ctx.q
    rows = [list(ctx.digits(e)) for e in elems]
    rk = 0
    for c in range(ctx.m):
        p = next((i for i in range(rk, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[rk], rows[p] = rows[p], rows[rk]
        inv = pow(rows[rk][c], -1, q)
        rows[rk] = [(x * inv) % q for x in rows[rk]]
        for i in range(len(rows)):
            if i != rk and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % q for x, y in zip(rows[i], rows[rk])]
        rk += 1
    return rk


def random_independent(rng: SplitMix64, ctx: FieldCtx, s: int) -> tuple[int, ...]:
    """s F_q-independent elements of F_{q^m}."""
    if not 0 <= s <= ctx.m:
        raise ValueError(f"cannot draw {s} independent elements in dimension {ctx.m}")
    out: list[int] = []
    while len(out) < s:
        cand = 1 + rng.below(ctx.order - 1)
        if _digit_rank(ctx, out + [cand]) > len(out):
            out.append(cand)
    return tuple(out)


def random_subspaces(rng: SplitMix64, ctx: FieldCtx, dims: Sequence[int]) -> list[tuple[int, ...]]:
    return [random_independent(rng, ctx, s) for s in dims]


def random_chain(rng: SplitMix64, ctx: FieldCtx, dims: Sequence[int]) -> list[tuple[int, ...]]:
    """Nested subspaces: position j gets the first s_j elements of one family."""
    beta = random_independent(rng, ctx, max(dims))
    return [beta[:s] for s in dims]


@dataclass(frozen=True)
class Instance:
    ctx: FieldCtx
    code: LinearCode
    subspaces: SubspaceFamily
    params: GabidulinParams | None
    chained: bool


def random_instance(seed: int, q: int = 2, ms: Sequence[int] = (2, 3, 4), ns: Sequence[int] = (2, 3, 4)) -> Instance:
    """A small (code, subspaces) pair.

    Draws, in order: m, n, k in 1..n-1, whether the code is Gabidulin
    (only possible when n <= m; then two chances in three), whether the
    subspaces nest, the dimensions s_j in 1..m, the code, the subspaces.
    A non-Gabidulin code has a uniformly random generator, redrawn until it
    has full rank.
    """
    rng = SplitMix64(seed)
    m = ms[rng.below(len(ms))]
    n = ns[rng.below(len(ns))]
    k = 1 + rng.below(n - 1)
    gabidulin = n <= m and rng.below(3) != 0
    chained = rng.below(2) == 0
    dims = [1 + rng.below(m) for _ in range(n)]
    ctx = build_extension(q, m)
    params = None
    if gabidulin:
        params = GabidulinParams(ctx, random_independent(rng, ctx, n), k)
        code = gab_code(params)
    else:
        while True:
            rows = tuple(tuple(rng.below(ctx.order) for _ in range(n)) for _ in range(k))
            G = Mat(ctx, rows, n)
            if rank(G) == k:
                code = LinearCode(G)
                break
    draw = random_chain if chained else random_subspaces
    fam = SubspaceFamily.from_elements(ctx, draw(rng, ctx, dims))
    return Instance(ctx, code, fam, params, chained)
