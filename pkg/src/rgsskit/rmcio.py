"""The RMC1 text format for matrices over F_q or F_{q^m}.

A block is a header line followed by ``rows`` lines of space-separated
integers in the field encoding::

    RMC1 <q> <m> <rows> <cols> field:<base|ext> modulus:<c0>,<c1>,...,<cm>

A stream may hold several blocks.  Blank lines and lines starting with
``#`` are ignored by the parser, which lets commands annotate their output.
"""

from __future__ import annotations

from typing import Iterable, TextIO

from .field import build_extension
from .linalg import Mat

__all__ = ["RmcParseError", "emit_matrix", "parse_matrices", "read_matrices"]


class RmcParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def emit_matrix(M: Mat) -> str:
    ctx = M.ctx
    kind = "base" if M.base else "ext"
    mod = ",".join(str(c) for c in ctx.modulus)
    lines = [f"RMC1 {ctx.q} {ctx.m} {M.nrows} {M.ncols} field:{kind} modulus:{mod}"]
    lines.extend(" ".join(str(x) for x in r) for r in M.rows)
    return "\n".join(lines) + "\n"


def _parse_header(lineno: int, line: str):
    parts = line.split()
    if len(parts) != 7 or parts[0] != "RMC1":
        raise RmcParseError(lineno, f"expected an RMC1 header, got {line!r}")
    try:
        q, m, rows, cols = (int(x) for x in parts[1:5])
    except ValueError:
        raise RmcParseError(lineno, "q, m, rows and cols must be integers") from None
    if not parts[5].startswith("field:") or parts[5][6:] not in ("base", "ext"):
        raise RmcParseError(lineno, f"bad field tag {parts[5]!r}")
    if not parts[6].startswith("modulus:"):
        raise RmcParseError(lineno, f"bad modulus tag {parts[6]!r}")
    try:
        modulus = [int(c) for c in parts[6][8:].split(",")]
    except ValueError:
        raise RmcParseError(lineno, "modulus coefficients must be integers") from None
    if rows < 0 or cols < 0:
        raise RmcParseError(lineno, "negative dimensions")
    try:
        ctx = build_extension(q, m, modulus)
    except ValueError as e:
        raise RmcParseError(lineno, str(e)) from None
    return ctx, rows, cols, parts[5][6:] == "base"


def parse_matrices(lines: Iterable[str]) -> list[Mat]:
    body = [(i + 1, ln.strip()) for i, ln in enumerate(lines)]
    body = [(i, ln) for i, ln in body if ln and not ln.startswith("#")]
    out = []
    pos = 0
    while pos < len(body):
        lineno, header = body[pos]
        ctx, nrows, ncols, base = _parse_header(lineno, header)
        pos += 1
        limit = ctx.q if base else ctx.order
        rows = []
        for _ in range(nrows):
            if pos >= len(body):
                raise RmcParseError(lineno, f"expected {nrows} rows, file ended after {len(rows)}")
            ln_no, text = body[pos]
            try:
                row = tuple(int(x) for x in text.split())
            except ValueError:
                raise RmcParseError(ln_no, f"non-integer entry in {text!r}") from None
            if len(row) != ncols:
                raise RmcParseError(ln_no, f"expected {ncols} entries, got {len(row)}")
            for x in row:
                if not 0 <= x < limit:
                    raise RmcParseError(ln_no, f"entry {x} out of range [0, {limit})")
            rows.append(row)
            pos += 1
        out.append(Mat(ctx, tuple(rows), ncols, base))
    return out


def read_matrices(fh: TextIO) -> list[Mat]:
    return parse_matrices(fh.read().splitlines())
