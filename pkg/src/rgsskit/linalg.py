"""Dense exact linear algebra over F_q and F_{q^m}.

Vectors are row vectors throughout.  A :class:`Mat` carries the extension
context it was built from plus a ``base`` flag saying whether its entries
live in the prime field F_q or in F_{q^m}; arithmetic dispatches on that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .field import FieldCtx

__all__ = [
    "BasisSet",
    "Mat",
    "block_diag",
    "change_of_basis",
    "complete_basis",
    "coords",
    "rank",
    "rank_weight",
    "right_kernel",
    "row_space_equal",
    "rref",
    "span_basis",
    "span_contains",
]


@dataclass(frozen=True, eq=False)
class Mat:
    ctx: FieldCtx
    rows: tuple[tuple[int, ...], ...]
    ncols: int
    base: bool = False

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError(f"row of length {len(r)} in a matrix with {self.ncols} columns")

    @classmethod
    def of(cls, ctx: FieldCtx, rows: Iterable[Sequence[int]], ncols: int | None = None, base=False) -> Mat:
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        limit = ctx.q if base else ctx.order
        for r in rows:
            for x in r:
                if not 0 <= x < limit:
                    raise ValueError(f"entry {x} out of range for the {'base' if base else 'extension'} field")
        return cls(ctx, rows, ncols, base)

    @classmethod
    def zeros(cls, ctx: FieldCtx, nrows: int, ncols: int, base=False) -> Mat:
        return cls(ctx, tuple((0,) * ncols for _ in range(nrows)), ncols, base)

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int, base=False) -> Mat:
        return cls(ctx, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n, base)

    @property
    def field(self) -> FieldCtx:
        return self.ctx.prime_field if self.base else self.ctx

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (
            self.base == other.base
            and self.ncols == other.ncols
            and self.rows == other.rows
            and self.ctx.q == other.ctx.q
            and (self.base or self.ctx.modulus == other.ctx.modulus)
        )

    def __hash__(self):
        return hash((self.base, self.ncols, self.rows))

    def __repr__(self):
        kind = "base" if self.base else "ext"
        return f"Mat({self.nrows}x{self.ncols} {kind}, {[list(r) for r in self.rows]})"

    def _like(self, rows, ncols=None) -> Mat:
        return Mat(self.ctx, tuple(tuple(r) for r in rows), self.ncols if ncols is None else ncols, self.base)

    @property
    def T(self) -> Mat:
        if self.ncols == 0:
            return Mat(self.ctx, (), self.nrows, self.base)
        if self.nrows == 0:
            return Mat(self.ctx, tuple(() for _ in range(self.ncols)), 0, self.base)
        return self._like(zip(*self.rows), self.nrows)

    def __matmul__(self, other: Mat) -> Mat:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if self.base != other.base:
            raise ValueError("cannot multiply a base-field matrix by an extension-field matrix")
        F = self.field
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        return self._like([[F.dot(r, c) for c in cols] for r in self.rows], other.ncols)

    def vecmul(self, v: Sequence[int]) -> tuple[int, ...]:
        """Row vector times matrix."""
        F = self.field
        out = [0] * self.ncols
        for x, row in zip(v, self.rows):
            if x:
                for j, y in enumerate(row):
                    if y:
                        out[j] = F.add(out[j], F.mul(x, y))
        return tuple(out)

    def select_columns(self, cols: Sequence[int]) -> Mat:
        return self._like([[r[j] for j in cols] for r in self.rows], len(cols))

    def drop_columns(self, cols: Iterable[int]) -> Mat:
        drop = set(cols)
        keep = [j for j in range(self.ncols) if j not in drop]
        return self.select_columns(keep)

    def vstack(self, other: Mat) -> Mat:
        if other.ncols != self.ncols:
            raise ValueError("column count mismatch")
        return self._like(self.rows + other.rows)

    def inverse(self) -> Mat:
        n = self.nrows
        if n != self.ncols:
            raise ValueError("only square matrices are invertible")
        aug = self._like([list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(self.rows)], 2 * n)
        R, rk, piv = rref(aug)
        if rk < n or piv[n - 1] != n - 1:
            raise ValueError("matrix is singular")
        return self._like([r[n:] for r in R.rows], n)


def rref(M: Mat) -> tuple[Mat, int, list[int]]:
    """Reduced row echelon form.

    Pivot search scans columns left to right and takes the topmost eligible
    row, so the output is fully determined by the input.
    """
    F = M.field
    A = [list(r) for r in M.rows]
    nrows, ncols = len(A), M.ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        pr = A[r]
        if pr[c] != 1:
            inv = F.inv(pr[c])
            pr = A[r] = [F.mul(inv, x) if x else 0 for x in pr]
        for i in range(nrows):
            if i != r and A[i][c]:
                f = A[i][c]
                Ai = A[i]
                for j in range(c, ncols):
                    if pr[j]:
                        Ai[j] = F.sub(Ai[j], F.mul(f, pr[j]))
        pivots.append(c)
        r += 1
    return M._like(A), r, pivots


def rank(M: Mat) -> int:
    return rref(M)[1]


def right_kernel(M: Mat) -> Mat:
    """Basis of {v : M v^T = 0}, one row per free column (ascending)."""
    F = M.field
    R, rk, piv = rref(M)
    n = M.ncols
    pivset = set(piv)
    rows = []
    for f in range(n):
        if f in pivset:
            continue
        v = [0] * n
        v[f] = 1
        for i, p in enumerate(piv):
            if R.rows[i][f]:
                v[p] = F.neg(R.rows[i][f])
        rows.append(v)
    return M._like(rows, n)


def span_basis(M: Mat) -> Mat:
    """Nonzero rows of the RREF: the canonical basis of the row space."""
    R, rk, _ = rref(M)
    return M._like(R.rows[:rk])


def row_space_equal(A: Mat, B: Mat) -> bool:
    if A.ncols != B.ncols:
        return False
    return span_basis(A).rows == span_basis(B).rows


def span_contains(A: Mat, B: Mat) -> bool:
    """True iff every row of B lies in the row space of A."""
    if A.ncols != B.ncols:
        return False
    return rank(A.vstack(B)) == rank(A)


def block_diag(blocks: Sequence[Mat]) -> Mat:
    if not blocks:
        raise ValueError("need at least one block")
    first = blocks[0]
    ncols = sum(b.ncols for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        for r in b.rows:
            rows.append((0,) * offset + r + (0,) * (ncols - offset - b.ncols))
        offset += b.ncols
    return Mat(first.ctx, tuple(rows), ncols, first.base)


@dataclass(frozen=True, eq=False)
class BasisSet:
    """An ordered F_q-independent family of elements of F_{q^m}.

    With m elements it is a full basis and supports coordinate maps in both
    directions; with fewer it spans a proper subspace.
    """

    ctx: FieldCtx
    elements: tuple[int, ...]
    _digit_mat: Mat = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(int(e) for e in self.elements))
        if len(self.elements) > self.ctx.m:
            raise ValueError(f"a family of {len(self.elements)} elements cannot be independent in dimension {self.ctx.m}")
        dm = Mat.of(self.ctx, [self.ctx.digits(e) for e in self.elements], self.ctx.m, base=True)
        if rank(dm) != len(self.elements):
            raise ValueError("dependent family")
        object.__setattr__(self, "_digit_mat", dm)

    @classmethod
    def standard(cls, ctx: FieldCtx) -> BasisSet:
        return cls(ctx, tuple(ctx.basis_powers()))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        return isinstance(other, BasisSet) and self.elements == other.elements and self.ctx is other.ctx

    def __hash__(self):
        return hash(self.elements)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def is_full(self) -> bool:
        return len(self.elements) == self.ctx.m

    @property
    def digit_matrix(self) -> Mat:
        """Rows are the polynomial-basis digits of the elements."""
        return self._digit_mat

    @cached_property
    def _inverse_digits(self) -> Mat:
        if not self.is_full:
            raise ValueError(f"not a basis: rank {len(self.elements)} < {self.ctx.m}")
        return self._digit_mat.inverse()

    def coords(self, a: int) -> tuple[int, ...]:
        return self._inverse_digits.vecmul(self.ctx.digits(a))

    def element(self, coords: Sequence[int]) -> int:
        """Inverse of :meth:`coords`; also works for partial families."""
        if len(coords) != len(self.elements):
            raise ValueError(f"expected {len(self.elements)} coordinates, got {len(coords)}")
        return self.ctx.from_digits(self._digit_mat.vecmul(coords))

    def contains(self, a: int) -> bool:
        """Membership of ``a`` in the F_q-span of the family."""
        if self.is_full or a == 0:
            return True
        M = self._digit_mat.vstack(Mat(self.ctx, (self.ctx.digits(a),), self.ctx.m, True))
        return rank(M) == len(self.elements)

    def span_coords(self, a: int) -> tuple[int, ...]:
        """Coordinates of ``a`` in this (possibly partial) family."""
        full = complete_basis(self)
        c = full.coords(a)
        if any(c[len(self.elements):]):
            raise ValueError(f"element {a} is not in the span of the family")
        return c[: len(self.elements)]


def coords(ctx: FieldCtx, a: int, B: BasisSet) -> tuple[int, ...]:
    return B.coords(a)


def rank_weight(ctx: FieldCtx, x: Sequence[int], B: BasisSet | None = None) -> int:
    """Rank over F_q of the m x n coordinate matrix of ``x``."""
    if not x:
        return 0
    cols = [ctx.digits(v) if B is None else B.coords(v) for v in x]
    # Row rank of the n x m transpose equals the rank of the m x n matrix.
    return rank(Mat(ctx, tuple(cols), ctx.m, True))


def complete_basis(partial: BasisSet) -> BasisSet:
    """Extend greedily by 1, x, x^2, ... keeping whatever raises the rank."""
    ctx = partial.ctx
    elems = list(partial.elements)
    if len(elems) == ctx.m:
        return partial
    rows = [ctx.digits(e) for e in elems]
    current = len(rows)
    for cand in ctx.basis_powers():
        trial = rows + [ctx.digits(cand)]
        if rank(Mat(ctx, tuple(trial), ctx.m, True)) > current:
            rows, current = trial, current + 1
            elems.append(cand)
            if current == ctx.m:
                break
    return BasisSet(ctx, tuple(elems))


def change_of_basis(ctx: FieldCtx, src: BasisSet, dst: BasisSet) -> Mat:
    """Q with coords(a, src) @ Q == coords(a, dst) for every a."""
    if not (src.is_full and dst.is_full):
        raise ValueError("change of basis needs two full bases")
    return src.digit_matrix @ dst._inverse_digits
