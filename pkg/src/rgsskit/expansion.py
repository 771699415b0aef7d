"""q-ary images of codes over F_{q^m}.

Every coordinate c_j of a word is written in its own basis B_j, giving a
word of length n*m over F_q.  Messages are always read in a single
reference basis B.  With the row-vector convention, switching coordinate j
from B to B_j is right multiplication of block j by
``change_of_basis(B, B_j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .codes import LinearCode
from .field import FieldCtx
from .linalg import BasisSet, Mat, block_diag, right_kernel

__all__ = [
    "BasisFamily",
    "ExpandedCode",
    "basis_change_blockdiag",
    "expand_generator",
    "expand_parity",
    "expand_vector",
    "mul_map_matrix",
    "unexpand_vector",
]


@dataclass(frozen=True)
class BasisFamily:
    ctx: FieldCtx
    bases: tuple[BasisSet, ...]
    ref: BasisSet

    def __post_init__(self):
        object.__setattr__(self, "bases", tuple(self.bases))
        for B in self.bases + (self.ref,):
            if not B.is_full:
                raise ValueError("every basis in a family must be a full basis")

    @classmethod
    def uniform(cls, ctx: FieldCtx, n: int, B: BasisSet | None = None) -> BasisFamily:
        B = B or BasisSet.standard(ctx)
        return cls(ctx, (B,) * n, B)

    @property
    def n(self) -> int:
        return len(self.bases)


@dataclass(frozen=True)
class ExpandedCode:
    code: LinearCode
    source: LinearCode
    family: BasisFamily


def expand_vector(fam: BasisFamily, c: Sequence[int]) -> tuple[int, ...]:
    if len(c) != fam.n:
        raise ValueError(f"word of length {len(c)} for a family of {fam.n} bases")
    out: list[int] = []
    for cj, Bj in zip(c, fam.bases):
        out.extend(Bj.coords(cj))
    return tuple(out)


def unexpand_vector(fam: BasisFamily, v: Sequence[int]) -> tuple[int, ...]:
    m = fam.ctx.m
    if len(v) != m * fam.n:
        raise ValueError(f"expected {m * fam.n} coordinates, got {len(v)}")
    return tuple(Bj.element(v[j * m : (j + 1) * m]) for j, Bj in enumerate(fam.bases))


def mul_map_matrix(ctx: FieldCtx, a: int, B: BasisSet, Bj: BasisSet) -> Mat:
    """m x m matrix M with coords(x, B) @ M == coords(x * a, Bj)."""
    return Mat(ctx, tuple(Bj.coords(ctx.mul(b, a)) for b in B.elements), ctx.m, True)


def _expanded_generator_matrix(C: LinearCode, fam: BasisFamily) -> Mat:
    ctx = C.ctx
    rows = []
    for g in C.generator.rows:
        for b in fam.ref.elements:
            rows.append(expand_vector(fam, [ctx.mul(b, x) for x in g]))
    return Mat(ctx, tuple(rows), ctx.m * C.length, True)


def expand_generator(C: LinearCode, fam: BasisFamily) -> ExpandedCode:
    """Generator of Exp(C): rows ordered by source row, then by element of B."""
    if C.base:
        raise ValueError("expansion applies to codes over the extension field")
    if fam.n != C.length:
        raise ValueError(f"family of {fam.n} bases for a code of length {C.length}")
    return ExpandedCode(LinearCode(_expanded_generator_matrix(C, fam)), C, fam)


def expand_parity(C: LinearCode, fam: BasisFamily) -> Mat:
    return right_kernel(expand_generator(C, fam).code.generator)


def basis_change_blockdiag(Qs: Sequence[Mat], inverse_transpose: bool = False) -> Mat:
    """diag(Q_1, ..., Q_n), or diag((Q_1^-1)^T, ...) when ``inverse_transpose``."""
    blocks = [Q.inverse().T if inverse_transpose else Q for Q in Qs]
    return block_diag(blocks)
