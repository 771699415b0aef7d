"""Linear codes over F_q or F_{q^m}: dual, puncturing and shortening.

Index sets are 0-based throughout the library.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable

from .field import FieldCtx
from .linalg import Mat, rank, right_kernel, row_space_equal, span_basis, span_contains

__all__ = ["LinearCode", "dual", "puncture", "shorten"]


class LinearCode:
    """A code held through a full-row-rank generator matrix.

    Equality compares row spaces (via RREF), not generator matrices.
    """

    def __init__(self, generator: Mat):
        if rank(generator) != generator.nrows:
            raise ValueError("generator matrix does not have full row rank")
        self.generator = generator

    @classmethod
    def span(cls, M: Mat) -> LinearCode:
        """The code spanned by the rows of ``M`` (rows need not be independent)."""
        return cls(span_basis(M))

    @classmethod
    def zero(cls, ctx: FieldCtx, n: int, base=False) -> LinearCode:
        return cls(Mat(ctx, (), n, base))

    @property
    def ctx(self) -> FieldCtx:
        return self.generator.ctx

    @property
    def base(self) -> bool:
        return self.generator.base

    @property
    def field(self) -> FieldCtx:
        return self.generator.field

    @property
    def length(self) -> int:
        return self.generator.ncols

    @property
    def dimension(self) -> int:
        return self.generator.nrows

    n = length
    k = dimension

    @cached_property
    def parity_check(self) -> Mat:
        return right_kernel(self.generator)

    @cached_property
    def canonical(self) -> Mat:
        return span_basis(self.generator)

    @property
    def cardinality(self) -> int:
        return self.field.order ** self.dimension

    def encode(self, message) -> tuple[int, ...]:
        return self.generator.vecmul(message)

    def contains(self, word) -> bool:
        F = self.field
        return all(F.dot(h, word) == 0 for h in self.parity_check.rows)

    def is_subcode_of(self, other: LinearCode) -> bool:
        return span_contains(other.generator, self.generator)

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.base == other.base and row_space_equal(self.generator, other.generator)

    def __hash__(self):
        return hash(self.canonical)

    def __repr__(self):
        kind = "F_q" if self.base else "F_q^m"
        return f"LinearCode([{self.length}, {self.dimension}] over {kind})"


def dual(C: LinearCode) -> LinearCode:
    return LinearCode(right_kernel(C.generator))


def _check_index_set(C: LinearCode, I: Iterable[int]) -> set[int]:
    I = set(I)
    bad = [i for i in I if not 0 <= i < C.length]
    if bad:
        raise ValueError(f"positions {sorted(bad)} outside 0..{C.length - 1}")
    if len(I) == C.length:
        raise ValueError("cannot puncture or shorten every position")
    return I


def puncture(C: LinearCode, I: Iterable[int]) -> LinearCode:
    I = _check_index_set(C, I)
    return LinearCode.span(C.generator.drop_columns(I))


def shorten(C: LinearCode, I: Iterable[int]) -> LinearCode:
    """Short_I(C), computed as the dual of the punctured dual."""
    I = _check_index_set(C, I)
    return dual(puncture(dual(C), I))
