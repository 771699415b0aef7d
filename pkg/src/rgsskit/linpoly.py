"""q-polynomials P(z) = sum_i p_i z^(q^i) under addition and composition."""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldCtx

__all__ = ["LinPoly", "lp_add", "lp_compose", "lp_eval"]


@dataclass(frozen=True)
class LinPoly:
    """Coefficient i multiplies z^[i].  Trailing zeros are trimmed.

    Exponents are formal: z^[m] is kept distinct from z^[0] at the ring level
    and only collapses when the polynomial is evaluated.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, a: int, i: int) -> LinPoly:
        return cls((0,) * i + (a,))

    @classmethod
    def identity(cls) -> LinPoly:
        return cls((1,))

    @property
    def qdeg(self) -> float | int:
        """q-degree; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, ctx: FieldCtx, x: int) -> int:
        return lp_eval(ctx, self, x)


def lp_eval(ctx: FieldCtx, P: LinPoly, x: int) -> int:
    acc = 0
    for i, p in enumerate(P.coeffs):
        if p:
            acc = ctx.add(acc, ctx.mul(p, ctx.frob(x, i)))
    return acc


def lp_add(ctx: FieldCtx, P: LinPoly, Q: LinPoly) -> LinPoly:
    n = max(len(P.coeffs), len(Q.coeffs))
    a = P.coeffs + (0,) * (n - len(P.coeffs))
    b = Q.coeffs + (0,) * (n - len(Q.coeffs))
    return LinPoly(tuple(ctx.add(x, y) for x, y in zip(a, b)))


def lp_scale(ctx: FieldCtx, a: int, P: LinPoly) -> LinPoly:
    """Left multiplication by a constant, i.e. (a z) o P."""
    return LinPoly(tuple(ctx.mul(a, p) for p in P.coeffs))


def lp_compose(ctx: FieldCtx, P: LinPoly, Q: LinPoly) -> LinPoly:
    """P o Q, using (p z^[i]) o (r z^[j]) = p r^[i] z^[i+j]."""
    if P.is_zero() or Q.is_zero():
        return LinPoly()
    out = [0] * (len(P.coeffs) + len(Q.coeffs) - 1)
    for i, p in enumerate(P.coeffs):
        if not p:
            continue
        for j, r in enumerate(Q.coeffs):
            if r:
                out[i + j] = ctx.add(out[i + j], ctx.mul(p, ctx.frob(r, i)))
    return LinPoly(tuple(out))
