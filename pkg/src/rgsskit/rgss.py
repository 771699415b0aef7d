"""Rank generalized subspace subcodes C ∩ (V_1 x ... x V_n).

The generator is built on the q-ary image: expand C in a reference basis B,
take the parity check of the image, move coordinate j into a basis B_j whose
first s_j elements span V_j, puncture the parity check down to those
windows, and take its kernel.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .codes import LinearCode, shorten
from .expansion import BasisFamily, basis_change_blockdiag, expand_generator
from .field import FieldCtx
from .gabidulin import GabidulinParams
from .linalg import BasisSet, Mat, change_of_basis, complete_basis, rank, right_kernel

__all__ = [
    "ChainError",
    "ParentCode",
    "RgssBounds",
    "RgssCode",
    "SubspaceFamily",
    "parent_code",
    "parent_map",
    "rgss_bounds",
    "rgss_generator",
    "subspace_subcode",
    "support_set_U",
]


class ChainError(ValueError):
    """The subspaces do not form an inclusion chain once sorted by dimension."""


@dataclass(frozen=True)
class SubspaceFamily:
    ctx: FieldCtx
    families: tuple[BasisSet, ...]

    def __post_init__(self):
        object.__setattr__(self, "families", tuple(self.families))
        for D in self.families:
            if D.ctx is not self.ctx:
                raise ValueError("subspace basis built over a different field")
            if D.size == 0:
                raise ValueError("subspaces must have dimension >= 1")

    @classmethod
    def from_elements(cls, ctx: FieldCtx, families: Sequence[Sequence[int]]) -> SubspaceFamily:
        return cls(ctx, tuple(BasisSet(ctx, tuple(f)) for f in families))

    @property
    def n(self) -> int:
        return len(self.families)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(D.size for D in self.families)

    @property
    def s_max(self) -> int:
        return max(self.dims)

    def contains(self, word: Sequence[int]) -> bool:
        return all(D.contains(c) for D, c in zip(self.families, word))


def support_set_U(m: int, dims: Sequence[int]) -> tuple[int, ...]:
    """0-based positions (j*m, ..., j*m + s_j - 1) for every block j."""
    U = []
    for j, s in enumerate(dims):
        if not 1 <= s <= m:
            raise ValueError(f"subspace dimension {s} outside 1..{m}")
        U.extend(range(j * m, j * m + s))
    return tuple(U)


@dataclass(frozen=True)
class RgssCode:
    """Generator of the q-ary image of C ∩ W in the partial bases D_j."""

    generator: Mat
    source: LinearCode
    subspaces: SubspaceFamily
    bases: BasisFamily
    U: tuple[int, ...]
    Qs: tuple[Mat, ...]

    @property
    def dimension(self) -> int:
        return self.generator.nrows

    @property
    def cardinality(self) -> int:
        return self.source.ctx.q ** self.dimension

    def embed(self, y: Sequence[int]) -> tuple[int, ...]:
        """Map a row-space vector (length sum s_j) back to a word over F_{q^m}."""
        out = []
        pos = 0
        for D in self.subspaces.families:
            out.append(D.element(y[pos : pos + D.size]))
            pos += D.size
        if pos != len(y):
            raise ValueError(f"expected {pos} coordinates, got {len(y)}")
        return tuple(out)

    def words(self) -> set[tuple[int, ...]]:
        """Every codeword of C ∩ W, as words over F_{q^m}."""
        q = self.source.ctx.q
        G = self.generator
        out = set()
        for msg in itertools.product(range(q), repeat=G.nrows):
            out.add(self.embed(G.vecmul(msg)))
        return out


def rgss_generator(C: LinearCode, fam: SubspaceFamily, B: BasisSet | None = None) -> RgssCode:
    ctx = C.ctx
    n, m = C.length, ctx.m
    if C.base:
        raise ValueError("source code must be over the extension field")
    if fam.n != n:
        raise ValueError(f"{fam.n} subspaces for a code of length {n}")
    B = B or BasisSet.standard(ctx)

    U = support_set_U(m, fam.dims)
    completed = tuple(complete_basis(D) for D in fam.families)
    Qs = tuple(change_of_basis(ctx, B, Bj) for Bj in completed)
    G_hat = expand_generator(C, BasisFamily.uniform(ctx, n, B)).code.generator
    H_hat = right_kernel(G_hat)
    H_changed = H_hat @ basis_change_blockdiag(Qs, inverse_transpose=True)
    M_U = H_changed.select_columns(U)
    G_U = right_kernel(M_U)
    return RgssCode(G_U, C, fam, BasisFamily(ctx, completed, B), U, Qs)


def subspace_subcode(C: LinearCode, D: BasisSet, B: BasisSet | None = None) -> LinearCode:
    """q-ary image of C ∩ V^n in the basis D of V, via the single-basis S_U.

    Independent of :func:`rgss_generator`: the code is expanded directly in
    the completed basis and shortened with the generic code operations.
    """
    ctx = C.ctx
    n, m, s = C.length, ctx.m, D.size
    full = complete_basis(D)
    fam = BasisFamily(ctx, (full,) * n, B or BasisSet.standard(ctx))
    image = expand_generator(C, fam).code
    outside = [j * m + i for j in range(n) for i in range(s, m)]
    if len(outside) == n * m:
        raise ValueError("subspace dimension must be positive")
    if not outside:
        return image
    return shorten(image, outside)


@dataclass(frozen=True)
class RgssBounds:
    """Cardinality bounds.  ``lower`` is None when the lower bound is vacuous
    (trivially 1); ``upper`` is None when the source is not Gabidulin."""

    lower: int | None
    upper: int | None
    lower_exponent: int
    upper_exponent: int | None

    def describe(self) -> str:
        lo = "vacuous" if self.lower is None else str(self.lower)
        hi = "n/a" if self.upper is None else str(self.upper)
        return f"lower={lo} upper={hi}"


def rgss_bounds(q: int, m: int, n: int, k: int, dims: Sequence[int], d: int | None = None) -> RgssBounds:
    """Lower bound q^(sum s_i - m(n-k)); upper q^(m(max s_i - d + 1)) when d is given.

    ``d`` should only be passed for Gabidulin sources, where d = n - k + 1.
    A negative upper exponent means the subcode is {0}; the upper bound is
    then reported as 1.
    """
    if len(dims) != n:
        raise ValueError(f"{len(dims)} dimensions for length {n}")
    if any(not 0 <= s <= m for s in dims):
        raise ValueError(f"subspace dimensions must lie in 0..{m}")
    lo_exp = sum(dims) - m * (n - k)
    lower = q**lo_exp if lo_exp > 0 else None
    if d is None:
        return RgssBounds(lower, None, lo_exp, None)
    hi_exp = m * (max(dims) - d + 1)
    return RgssBounds(lower, q ** max(hi_exp, 0), lo_exp, hi_exp)


def _chain_basis(fam: SubspaceFamily) -> tuple[list[int], list[int]]:
    """Chain basis beta and the processing order (positions by s ascending)."""
    ctx = fam.ctx
    order = sorted(range(fam.n), key=lambda j: fam.dims[j])
    beta: list[int] = []
    for j in order:
        D = fam.families[j]
        rows = [ctx.digits(b) for b in beta] + [ctx.digits(x) for x in D.elements]
        if rank(Mat(ctx, tuple(rows), ctx.m, True)) != D.size:
            raise ChainError(
                f"subspace at position {j} does not contain the smaller ones; "
                "re-embed the subspaces into a chain before building the parent code"
            )
        for x in D.elements:
            if len(beta) == D.size:
                break
            trial = [ctx.digits(b) for b in beta] + [ctx.digits(x)]
            if rank(Mat(ctx, tuple(trial), ctx.m, True)) > len(beta):
                beta.append(x)
    return beta, order


@dataclass(frozen=True)
class ParentCode:
    """Gabidulin code with parity check T = (beta_j^[m-i+1])."""

    ctx: FieldCtx
    T: Mat
    beta: tuple[int, ...]
    d: int

    @property
    def length(self) -> int:
        return len(self.beta)

    @property
    def dimension(self) -> int:
        return max(self.length - self.d + 1, 0)

    @cached_property
    def code(self) -> LinearCode:
        return LinearCode(right_kernel(self.T))

    def syndrome(self, w: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.ctx.dot(row, w) for row in self.T.rows)

    def contains(self, w: Sequence[int]) -> bool:
        return not any(self.syndrome(w))


def parent_code(params: GabidulinParams, fam: SubspaceFamily) -> ParentCode:
    ctx, m, d = params.ctx, params.ctx.m, params.d
    if fam.n != params.n:
        raise ValueError(f"{fam.n} subspaces for a code of length {params.n}")
    beta, _ = _chain_basis(fam)
    T = Mat(ctx, tuple(tuple(ctx.frob(b, m - i + 1) for b in beta) for i in range(1, d)), len(beta))
    return ParentCode(ctx, T, tuple(beta), d)


def parent_map(params: GabidulinParams, fam: SubspaceFamily, c: Sequence[int]) -> tuple[int, ...]:
    """f_b(c) = h U^T, where c_i = sum_l U[l][i] beta_l."""
    ctx = params.ctx
    beta, _ = _chain_basis(fam)
    chain = BasisSet(ctx, tuple(beta))
    s = len(beta)
    U_cols = []
    for ci, Di in zip(c, fam.families):
        u = chain.span_coords(ci)
        if any(u[Di.size :]):
            raise ValueError(f"coordinate {ci} is not in its subspace")
        U_cols.append(u)
    h = params.h
    return tuple(ctx.sum(ctx.scale(U_cols[i][l], h[i]) for i in range(len(c))) for l in range(s))
