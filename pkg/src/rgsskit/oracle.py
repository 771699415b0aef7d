"""Brute-force ground truth for the algebraic modules.

Nothing here calls into linalg, codes, expansion or rgss: codewords are
listed by running over every message, subspace membership is a lookup in
the explicitly enumerated span, and ranks come from a private elimination
routine.  Keep it that way; these functions are what the others are
checked against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import FieldCtx

__all__ = [
    "DEFAULT_CAP",
    "CapacityError",
    "CodewordSet",
    "enumerate_code",
    "enumerate_span",
    "nearest_codewords",
    "oracle_min_rank_distance",
    "oracle_puncture",
    "oracle_rank_weight",
    "oracle_rgss",
    "oracle_shorten",
]

DEFAULT_CAP = 1 << 20
INFINITE_DISTANCE = float("inf")


class CapacityError(RuntimeError):
    """Enumeration would exceed the configured cap."""

    def __init__(self, required: int, cap: int):
        super().__init__(f"enumeration needs {required} words, cap is {cap}")
        self.required = required
        self.cap = cap


@dataclass(frozen=True)
class CodewordSet:
    words: tuple[tuple[int, ...], ...]
    source: str = ""

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w):
        return tuple(w) in self.as_set()

    def as_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.words)


def _field_of(ctx: FieldCtx, base: bool) -> FieldCtx:
    return ctx.prime_field if base else ctx


def enumerate_span(F: FieldCtx, rows: Sequence[Sequence[int]], length: int, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    """All F-linear combinations of ``rows`` (duplicates removed, sorted)."""
    size = F.order ** len(rows)
    if size > cap:
        raise CapacityError(size, cap)
    out = set()
    for msg in itertools.product(range(F.order), repeat=len(rows)):
        w = [0] * length
        for a, r in zip(msg, rows):
            if a:
                for j, x in enumerate(r):
                    if x:
                        w[j] = F.add(w[j], F.mul(a, x))
        out.add(tuple(w))
    return sorted(out)


def enumerate_code(C, cap: int = DEFAULT_CAP) -> CodewordSet:
    """Every codeword of a LinearCode (anything with .generator)."""
    G = C.generator
    F = _field_of(G.ctx, G.base)
    words = enumerate_span(F, G.rows, G.ncols, cap)
    return CodewordSet(tuple(words), f"enumerate_code[{G.ncols},{G.nrows}]")


def _fq_rank(q: int, vectors: Iterable[Sequence[int]]) -> int:
    """Rank over F_q of integer vectors, by plain elimination mod q."""
    rows = [list(v) for v in vectors if any(v)]
    rk = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((i for i in range(rk, len(rows)) if rows[i][c] % q), None)
        if p is None:
            continue
        rows[rk], rows[p] = rows[p], rows[rk]
        inv = pow(rows[rk][c], -1, q)
        rows[rk] = [(x * inv) % q for x in rows[rk]]
        for i in range(len(rows)):
            if i != rk and rows[i][c] % q:
                f = rows[i][c]
                rows[i] = [(x - f * y) % q for x, y in zip(rows[i], rows[rk])]
        rk += 1
    return rk


def oracle_rank_weight(ctx: FieldCtx, word: Sequence[int]) -> int:
    return _fq_rank(ctx.q, [ctx.digits(x) for x in word])


def _subspace_elements(ctx: FieldCtx, family: Sequence[int]) -> frozenset[int]:
    out = set()
    for coeffs in itertools.product(range(ctx.q), repeat=len(family)):
        acc = [0] * ctx.m
        for a, b in zip(coeffs, family):
            for i, d in enumerate(ctx.digits(b)):
                acc[i] = (acc[i] + a * d) % ctx.q
        out.add(ctx.from_digits(acc))
    return frozenset(out)


def oracle_rgss(C, families: Sequence[Sequence[int]], cap: int = DEFAULT_CAP) -> CodewordSet:
    """C ∩ (span D_1 x ... x span D_n), filtered literally from the codeword list.

    ``families`` may be a SubspaceFamily or plain sequences of elements.
    """
    ctx = C.generator.ctx
    fams = getattr(families, "families", families)
    spans = [_subspace_elements(ctx, tuple(getattr(f, "elements", f))) for f in fams]
    words = [w for w in enumerate_code(C, cap) if all(x in V for x, V in zip(w, spans))]
    return CodewordSet(tuple(words), "oracle_rgss")


def oracle_min_rank_distance(ctx: FieldCtx, S: Iterable[Sequence[int]]) -> int | float:
    """Minimum rank weight over the nonzero words; inf for the zero code."""
    best = INFINITE_DISTANCE
    for w in S:
        if any(w):
            best = min(best, oracle_rank_weight(ctx, w))
    return best


def oracle_min_hamming_distance(S: Iterable[Sequence[int]]) -> int | float:
    best = INFINITE_DISTANCE
    for w in S:
        wt = sum(1 for x in w if x)
        if wt:
            best = min(best, wt)
    return best


def oracle_puncture(S: Iterable[Sequence[int]], I: Iterable[int]) -> frozenset[tuple[int, ...]]:
    I = set(I)
    return frozenset(tuple(x for j, x in enumerate(w) if j not in I) for w in S)


def oracle_shorten(S: Iterable[Sequence[int]], I: Iterable[int]) -> frozenset[tuple[int, ...]]:
    I = set(I)
    return oracle_puncture((w for w in S if all(w[i] == 0 for i in I)), I)


def nearest_codewords(ctx: FieldCtx, S: Iterable[Sequence[int]], y: Sequence[int], radius: int) -> list[tuple[int, ...]]:
    """Codewords within rank distance ``radius`` of ``y``, by exhaustive search."""
    out = []
    for c in S:
        diff = [ctx.sub(a, b) for a, b in zip(y, c)]
        if _fq_rank(ctx.q, [ctx.digits(x) for x in diff]) <= radius:
            out.append(tuple(c))
    return out
