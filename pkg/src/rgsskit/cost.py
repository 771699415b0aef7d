"""Work factors for recovering hidden bases by enumeration.

SEMC hides one basis change of F_{q^m}; GSIC hides one per coordinate.  The
estimate for each is

    (bases / (m (q^m - 1))) * (n + (q-1)/q) m^3 * k' m^2 (n - k)

with bases = N_{q,m,1} for SEMC and m^n N_{q,m,n} for GSIC, where
N_{q,m,n} = (prod_{i<m} (q^m - q^i))^n counts n-tuples of ordered bases.
All arithmetic is exact; costs are Fractions, with ceilings alongside.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Sequence

from .field import is_prime

__all__ = ["CostReport", "attack_cost", "count_bases", "gsic_instance_check"]

MODES = ("semc", "gsic")


def count_bases(q: int, m: int, n: int = 1) -> int:
    """Number of n-tuples of ordered F_q-bases of F_{q^m}, i.e. |GL_m(F_q)|^n."""
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime")
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    gl = math.prod(q**m - q**i for i in range(m))
    return gl**n


def _log2(x: Fraction) -> float:
    return math.log2(x.numerator) - math.log2(x.denominator)


@dataclass(frozen=True)
class CostReport:
    mode: str
    q: int
    m: int
    n: int
    k: int
    k_sub: int
    n_single: int
    n_general: int
    cost_semc: Fraction
    cost_gsic: Fraction

    @property
    def cost(self) -> Fraction:
        return self.cost_semc if self.mode == "semc" else self.cost_gsic

    @property
    def cost_semc_ceil(self) -> int:
        return math.ceil(self.cost_semc)

    @property
    def cost_gsic_ceil(self) -> int:
        return math.ceil(self.cost_gsic)

    @property
    def log2_semc(self) -> float:
        return _log2(self.cost_semc)

    @property
    def log2_gsic(self) -> float:
        return _log2(self.cost_gsic)

    @property
    def ratio(self) -> Fraction:
        return self.cost_gsic / self.cost_semc

    def to_dict(self) -> dict:
        d = asdict(self)
        d["cost_semc"] = str(self.cost_semc)
        d["cost_gsic"] = str(self.cost_gsic)
        d.update(
            cost=str(self.cost),
            cost_ceil=math.ceil(self.cost),
            cost_semc_ceil=self.cost_semc_ceil,
            cost_gsic_ceil=self.cost_gsic_ceil,
            log2_semc=round(self.log2_semc, 2),
            log2_gsic=round(self.log2_gsic, 2),
            log2_cost=round(_log2(self.cost), 2),
        )
        return d

    def to_text(self) -> str:
        """Flat ``key: value`` block; big integers printed in full."""
        d = self.to_dict()
        keys = [
            "mode", "q", "m", "n", "k", "k_sub", "n_single", "n_general",
            "cost_semc", "cost_semc_ceil", "log2_semc",
            "cost_gsic", "cost_gsic_ceil", "log2_gsic",
            "cost", "cost_ceil", "log2_cost",
        ]  # fmt: skip
        lines = []
        for key in keys:
            v = d[key]
            lines.append(f"{key}: {v:.2f}" if isinstance(v, float) else f"{key}: {v}")
        return "\n".join(lines) + "\n"


def attack_cost(q: int, m: int, n: int, k: int, k_sub: int, mode: str = "gsic") -> CostReport:
    """Both enumeration costs for an [n, k] code over F_{q^m} with a k_sub-dimensional subcode."""
    mode = mode.lower()
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if not 0 < k_sub <= k < n:
        raise ValueError(f"need 0 < k' <= k < n, got k'={k_sub}, k={k}, n={n}")
    n1 = count_bases(q, m, 1)
    nn = count_bases(q, m, n)
    work = (n + Fraction(q - 1, q)) * m**3 * k_sub * m**2 * (n - k)
    denom = m * (q**m - 1)
    semc = Fraction(n1, denom) * work
    gsic = Fraction(m**n * nn, denom) * work
    return CostReport(mode, q, m, n, k, k_sub, n1, nn, semc, gsic)


def _apply_phi(q: int, m: int, n: int, word: Sequence[int], Qs, Q) -> list[int]:
    """(Q_1 M_1, ..., Q_n M_n) Q for the m x n matrix M whose column j is block j."""
    cols = []
    for j in range(n):
        block = word[j * m : (j + 1) * m]
        Qj = Qs[j]
        cols.append([sum(Qj[r][t] * block[t] for t in range(m)) % q for r in range(m)])
    # right multiplication by the n x n matrix Q mixes the columns
    out_cols = [[sum(cols[t][r] * Q[t][c] for t in range(n)) % q for r in range(m)] for c in range(n)]
    return [x for col in out_cols for x in col]


def _rank_mod_q(q: int, rows: list[list[int]]) -> int:
    rows = [list(r) for r in rows]
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


def gsic_instance_check(q: int, m: int, C_rows, D_rows, Q, Qs) -> bool:
    """Check a GSIC witness: is Phi_{(Q_j), Q}(D) a subcode of C?

    Codes are given by generator rows in F_q^{mn}, read as m x n matrices
    whose column j is the j-th length-m block.  Q_j are m x m and act on
    columns from the left; Q is n x n and acts on the right.  Nothing is
    solved here; the witness is only verified.
    """
    C_rows = [list(r) for r in C_rows]
    D_rows = [list(r) for r in D_rows]
    if not D_rows:
        return True
    width = len(D_rows[0])
    if width % m:
        raise ValueError(f"word length {width} is not a multiple of m={m}")
    n = width // m
    if len(Qs) != n or len(Q) != n:
        raise ValueError(f"need {n} block matrices and an {n} x {n} matrix Q")
    for M in list(Qs) + [Q]:
        size = len(M)
        if _rank_mod_q(q, [list(r) for r in M]) != size:
            raise ValueError("witness matrices must be invertible")
    images = [_apply_phi(q, m, n, d, Qs, Q) for d in D_rows]
    if not C_rows:
        return all(not any(v) for v in images)
    return _rank_mod_q(q, C_rows + images) == _rank_mod_q(q, C_rows)
