"""Exact arithmetic in F_q (q prime) and in F_{q^m} = F_q[x]/(f).

Elements are plain ints.  An element of F_{q^m} is encoded as the integer
whose little-endian base-q digits are its coordinates in the polynomial
basis 1, x, ..., x^(m-1); digit i is the coefficient of x^i.  For m = 1 the
encoding is simply the residue in [0, q).

Multiplication and Frobenius go through discrete log tables, which is cheap
at the field sizes this package targets (q^m up to about 2^16).
"""

from __future__ import annotations

import functools
from typing import Sequence

__all__ = [
    "DEFAULT_MODULI",
    "FieldCtx",
    "build_extension",
    "default_modulus",
    "format_poly",
    "frobenius_power",
    "is_prime",
]

MAX_FIELD_SIZE = 1 << 16

# Default moduli, coefficients little-endian (c0, c1, ..., cm).  Each entry is
# the monic irreducible of degree m whose integer encoding sum(c_i q^i) is
# smallest.  Pairs outside the table follow the same rule at run time.
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (0, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 1, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 13): (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 14): (1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 15): (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 16): (1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 1): (0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (3, 7): (2, 0, 1, 0, 0, 0, 0, 1),
    (3, 8): (2, 0, 1, 0, 0, 0, 0, 0, 1),
    (3, 9): (1, 0, 1, 2, 0, 0, 0, 0, 0, 1),
    (3, 10): (1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 1),
    (5, 1): (0, 1),
    (5, 2): (2, 0, 1),
    (5, 3): (1, 1, 0, 1),
    (5, 4): (2, 0, 0, 0, 1),
    (5, 5): (1, 4, 0, 0, 0, 1),
    (5, 6): (2, 1, 0, 0, 0, 0, 1),
    (7, 1): (0, 1),
    (7, 2): (1, 0, 1),
    (7, 3): (2, 0, 0, 1),
    (7, 4): (1, 1, 0, 0, 1),
    (7, 5): (3, 1, 0, 0, 0, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def format_poly(coeffs: Sequence[int]) -> str:
    """Render little-endian coefficients as e.g. ``x^3+x+1``."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = "x" if i == 1 else f"x^{i}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) or "0"


def _poly_divides(f: Sequence[int], p: Sequence[int], q: int) -> bool:
    """True iff the monic f divides p over F_q."""
    r = list(p)
    df = len(f) - 1
    while len(r) - 1 >= df:
        c = r[-1]
        if c:
            shift = len(r) - 1 - df
            for i, fc in enumerate(f):
                r[shift + i] = (r[shift + i] - c * fc) % q
        r.pop()
    return not any(r)


def _monic_polys(q: int, d: int):
    for v in range(q**d):
        yield [(v // q**i) % q for i in range(d)] + [1]


def _find_factor(p: Sequence[int], q: int) -> list[int] | None:
    m = len(p) - 1
    for d in range(1, m // 2 + 1):
        for f in _monic_polys(q, d):
            if _poly_divides(f, p, q):
                return f
    return None


@functools.lru_cache(maxsize=None)
def default_modulus(q: int, m: int) -> tuple[int, ...]:
    if (q, m) in DEFAULT_MODULI:
        return DEFAULT_MODULI[(q, m)]
    for p in _monic_polys(q, m):
        if _find_factor(p, q) is None:
            return tuple(p)
    raise AssertionError("unreachable: irreducibles exist in every degree")


class FieldCtx:
    """The field F_{q^m} built as F_q[x]/(modulus).

    Instances are immutable once built and may be shared freely.  Use
    :func:`build_extension` rather than calling the constructor directly so
    that identical fields are cached and compare by identity.
    """

    def __init__(self, q: int, m: int, modulus: Sequence[int]):
        if not is_prime(q):
            raise ValueError(f"q={q} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != m + 1:
            raise ValueError(f"modulus must have {m + 1} coefficients, got {len(modulus)}")
        if any(not 0 <= c < q for c in modulus):
            raise ValueError(f"modulus coefficients must lie in [0, {q})")
        if modulus[-1] != 1:
            raise ValueError("modulus is not monic")
        if q**m > MAX_FIELD_SIZE:
            raise ValueError(f"field of size {q}^{m} exceeds the supported {MAX_FIELD_SIZE}")
        factor = _find_factor(modulus, q)
        if factor is not None:
            raise ValueError(f"reducible: divisible by {format_poly(factor)}")

        self.q = q
        self.m = m
        self.modulus = modulus
        self.order = q**m
        self._digits = [self._to_digits(a) for a in range(self.order)]
        self._build_tables()
        if q > 2 and self.order <= 256:
            self._add_table = [
                [self._add_slow(a, b) for b in range(self.order)] for a in range(self.order)
            ]
        else:
            self._add_table = None

    def __repr__(self):
        return f"FieldCtx(q={self.q}, m={self.m}, modulus={format_poly(self.modulus)})"

    def __reduce__(self):
        return (build_extension, (self.q, self.m, self.modulus))

    # -- encoding -----------------------------------------------------------

    def _to_digits(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.q)
            out.append(r)
        return tuple(out)

    def digits(self, a: int) -> tuple[int, ...]:
        """Coordinates of ``a`` in the polynomial basis (length m)."""
        return self._digits[a]

    def from_digits(self, digits: Sequence[int]) -> int:
        v = 0
        for d in reversed(digits):
            v = v * self.q + (d % self.q)
        return v

    def contains(self, a) -> bool:
        return isinstance(a, int) and 0 <= a < self.order

    @property
    def alpha(self) -> int:
        """The class of x (equal to the root of the modulus)."""
        return self.q if self.m > 1 else self.from_digits([(-self.modulus[0]) % self.q])

    @functools.cached_property
    def prime_field(self) -> FieldCtx:
        return build_extension(self.q, 1)

    def basis_powers(self) -> list[int]:
        """The standard basis 1, x, ..., x^(m-1) as encoded elements."""
        return [self.q**i for i in range(self.m)]

    # -- tables ---------------------------------------------------------------

    def _mul_slow(self, a: int, b: int) -> int:
        q, m = self.q, self.m
        da, db = self._digits[a], self._digits[b]
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % q
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i]
            if c:
                for j in range(m):
                    prod[i - m + j] = (prod[i - m + j] - c * self.modulus[j]) % q
        return self.from_digits(prod[:m])

    def _pow_slow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_slow(r, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return r

    def _mul_x(self, a: int) -> int:
        top = a // self.q ** (self.m - 1)
        shifted = (a % self.q ** (self.m - 1)) * self.q
        if not top:
            return shifted
        d = list(self._digits[shifted])
        for j in range(self.m):
            d[j] = (d[j] - top * self.modulus[j]) % self.q
        return self.from_digits(d)

    def _build_tables(self):
        n = self.order - 1
        primes = [p for p in range(2, n + 1) if n % p == 0 and is_prime(p)]
        g = next(
            g
            for g in range(1, self.order)
            if all(self._pow_slow(g, n // p) != 1 for p in primes)
        )
        step = self._mul_x if (g == self.q and self.m > 1) else (lambda v: self._mul_slow(v, g))
        exp = [1] * n
        for i in range(1, n):
            exp[i] = step(exp[i - 1])
        log = [0] * self.order
        for i, v in enumerate(exp):
            log[v] = i
        self.generator = g
        self._exp = exp + exp
        self._log = log

    # -- arithmetic -----------------------------------------------------------

    def _add_slow(self, a: int, b: int) -> int:
        q = self.q
        da, db = self._digits[a], self._digits[b]
        return self.from_digits([(x + y) % q for x, y in zip(da, db)])

    def add(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_slow(a, b)

    def neg(self, a: int) -> int:
        if self.q == 2:
            return a
        return self.from_digits([-d for d in self._digits[a]])

    def sub(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def scale(self, c: int, a: int) -> int:
        """Multiply ``a`` by the prime-field scalar ``c``."""
        c %= self.q
        if c == 0 or a == 0:
            return 0
        if c == 1:
            return a
        return self.from_digits([c * d for d in self._digits[a]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def frob(self, a: int, i: int = 1) -> int:
        """a^(q^i); i is taken mod m, negative i allowed."""
        i %= self.m
        if i == 0 or a == 0:
            return a
        return self._exp[(self._log[a] * self.q**i) % (self.order - 1)]

    def sum(self, values) -> int:
        acc = 0
        for v in values:
            acc = self.add(acc, v)
        return acc

    def dot(self, xs, ys) -> int:
        acc = 0
        for x, y in zip(xs, ys):
            if x and y:
                acc = self.add(acc, self.mul(x, y))
        return acc

    def in_prime_field(self, a: int) -> bool:
        return a < self.q


@functools.lru_cache(maxsize=None)
def _build_cached(q: int, m: int, modulus: tuple[int, ...]) -> FieldCtx:
    return FieldCtx(q, m, modulus)


def build_extension(q: int, m: int, modulus: Sequence[int] | str | None = "default") -> FieldCtx:
    """Build (or fetch the cached) field F_{q^m}.

    ``modulus`` is a little-endian coefficient sequence of length m+1, or
    ``"default"`` / ``None`` for the built-in table entry.
    """
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if modulus is None or (isinstance(modulus, str) and modulus == "default"):
        modulus = default_modulus(q, m)
    return _build_cached(q, m, tuple(int(c) for c in modulus))


def frobenius_power(ctx: FieldCtx, a: int, i: int) -> int:
    return ctx.frob(a, i)
