"""Gabidulin codes Gab_k(g): Moore matrices, encoding and unique decoding."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .codes import LinearCode
from .field import FieldCtx
from .linalg import Mat, rank_weight, right_kernel
from .linpoly import LinPoly, lp_eval

__all__ = [
    "DecodeFailure",
    "GabidulinParams",
    "dual_support",
    "gab_code",
    "gab_decode",
    "gab_encode",
    "moore_matrix",
]


class DecodeFailure(Exception):
    """No codeword lies within rank distance tau_max of the received word."""


def moore_matrix(ctx: FieldCtx, v: Sequence[int], r: int) -> Mat:
    """r x n matrix with entry (i, j) = v_j^[i]."""
    if r < 1:
        raise ValueError("a Moore matrix needs at least one row")
    return Mat(ctx, tuple(tuple(ctx.frob(x, i) for x in v) for i in range(r)), len(v))


@dataclass(frozen=True)
class GabidulinParams:
    ctx: FieldCtx
    g: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "g", tuple(int(x) for x in self.g))
        n = len(self.g)
        if not 1 <= self.k < n:
            raise ValueError(f"need 1 <= k < n, got k={self.k}, n={n}")
        if n > self.ctx.m:
            raise ValueError(f"length n={n} exceeds m={self.ctx.m}: support not independent")
        if rank_weight(self.ctx, self.g) != n:
            raise ValueError("support not independent")

    @property
    def n(self) -> int:
        return len(self.g)

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    @property
    def tau_max(self) -> int:
        return (self.n - self.k) // 2

    @cached_property
    def h(self) -> tuple[int, ...]:
        return dual_support(self)

    @cached_property
    def generator(self) -> Mat:
        return moore_matrix(self.ctx, self.g, self.k)

    @cached_property
    def parity_check(self) -> Mat:
        return moore_matrix(self.ctx, self.h, self.n - self.k)


def gab_code(params: GabidulinParams) -> LinearCode:
    return LinearCode(params.generator)


def dual_support(params: GabidulinParams) -> tuple[int, ...]:
    """Vector h such that Moore(h, n-k) is a parity-check matrix of Gab_k(g).

    A kernel vector h' of Moore(g, n-1) satisfies sum_j g_j^[e] h'_j = 0 for
    e = 0..n-2.  The Moore parity check needs exponents -(n-k-1)..k-1, so h
    is h' shifted by Frobenius^-(n-k-1).  The two coincide when k = n-1.
    """
    ctx, g, n, k = params.ctx, params.g, params.n, params.k
    K = right_kernel(moore_matrix(ctx, g, n - 1))
    if K.nrows != 1:
        raise RuntimeError(f"kernel of Moore(g, n-1) has dimension {K.nrows}, expected 1")
    v = K.rows[0]
    lead = next(x for x in v if x)
    inv = ctx.inv(lead)
    v = [ctx.mul(inv, x) for x in v]
    h = tuple(ctx.frob(x, -(n - k - 1)) for x in v)

    if rank_weight(ctx, h) != n:
        raise RuntimeError("dual support does not have full rank weight")
    prod = moore_matrix(ctx, g, k) @ moore_matrix(ctx, h, n - k).T
    if any(any(r) for r in prod.rows):
        raise RuntimeError("Moore(h, n-k) does not annihilate the generator")
    return h


def gab_encode(params: GabidulinParams, message: Sequence[int]) -> tuple[int, ...]:
    if len(message) != params.k:
        raise ValueError(f"message must have length k={params.k}")
    P = LinPoly(tuple(message))
    return tuple(lp_eval(params.ctx, P, gj) for gj in params.g)


def _left_divide(ctx: FieldCtx, N: Sequence[int], V: LinPoly, k: int) -> LinPoly | None:
    """Solve V o P = N for P with qdeg P < k, or None if V does not divide N."""
    t = len(V.coeffs) - 1
    vt_inv = ctx.inv(V.coeffs[t])
    N = list(N) + [0] * max(0, t + k - len(N))
    p = [0] * k
    for j in range(k - 1, -1, -1):
        acc = N[t + j]
        for i in range(t):
            idx = t + j - i
            if idx < k and p[idx]:
                acc = ctx.sub(acc, ctx.mul(V.coeffs[i], ctx.frob(p[idx], i)))
        p[j] = ctx.frob(ctx.mul(acc, vt_inv), -t)
    # remaining coefficients of V o P must reproduce N exactly
    check = [0] * (t + k)
    for i, vi in enumerate(V.coeffs):
        if vi:
            for j, pj in enumerate(p):
                if pj:
                    check[i + j] = ctx.add(check[i + j], ctx.mul(vi, ctx.frob(pj, i)))
    if any(check[i] != (N[i] if i < len(N) else 0) for i in range(len(check))) or any(N[len(check):]):
        return None
    return LinPoly(tuple(p))


def gab_decode(params: GabidulinParams, y: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return (codeword, error) with rank(error) <= tau_max, or raise DecodeFailure.

    Interpolation step: find a nonzero pair (N, V) with qdeg V <= tau and
    qdeg N < k + tau such that V(y_j) = N(g_j) for every j.  When the error
    has rank at most tau, N = V o P exactly and P comes out by left division.
    """
    ctx, g, k, n = params.ctx, params.g, params.k, params.n
    y = tuple(int(v) for v in y)
    if len(y) != n:
        raise ValueError(f"received word must have length n={n}")
    tau = params.tau_max
    nV, nN = tau + 1, k + tau
    rows = []
    for j in range(n):
        rows.append(
            [ctx.frob(y[j], i) for i in range(nV)] + [ctx.neg(ctx.frob(g[j], l)) for l in range(nN)]
        )
    K = right_kernel(Mat(ctx, tuple(tuple(r) for r in rows), nV + nN))
    if K.nrows == 0:
        raise DecodeFailure("interpolation system has only the trivial solution")
    sol = K.rows[0]
    V = LinPoly(sol[:nV])
    N = sol[nV:]
    if V.is_zero():
        raise DecodeFailure("interpolation produced a zero error locator")
    P = _left_divide(ctx, N, V, k)
    if P is None:
        raise DecodeFailure("error locator does not divide the interpolant")
    c = tuple(lp_eval(ctx, P, gj) for gj in g)
    e = tuple(ctx.sub(a, b) for a, b in zip(y, c))
    if rank_weight(ctx, e) > tau:
        raise DecodeFailure("candidate is farther than tau_max")
    return c, e
