"""Command-line front end: ``rgsskit <subcommand> ...``.

Exit codes: 0 ok, 1 verification mismatch, 2 input error, 3 capacity refusal.
Index sets (U) are printed 1-based.
"""

from __future__ import annotations

import argparse
import json
import sys

from .codes import LinearCode
from .cost import attack_cost
from .expansion import BasisFamily, expand_generator, expand_parity
from .field import build_extension, format_poly
from .gabidulin import GabidulinParams, gab_code
from .linalg import BasisSet, Mat
from .oracle import DEFAULT_CAP, CapacityError, oracle_rgss
from .prng import SplitMix64, random_chain, random_independent, random_subspaces
from .rgss import SubspaceFamily, parent_code, parent_map, rgss_bounds, rgss_generator
from .rmcio import RmcParseError, emit_matrix, parse_matrices

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3


class InputError(Exception):
    pass


def _csv_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _read_mats(path: str) -> list[Mat]:
    try:
        with open(path) as fh:
            return parse_matrices(fh.read().splitlines())
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    except RmcParseError as e:
        raise InputError(f"{path}: {e}") from None


def _read_code(path: str) -> LinearCode:
    mats = _read_mats(path)
    if not mats:
        raise InputError(f"{path}: no matrix found")
    G = mats[0]
    if G.base:
        raise InputError(f"{path}: source code must be over the extension field (field:ext)")
    try:
        return LinearCode(G)
    except ValueError as e:
        raise InputError(f"{path}: {e}") from None


def _field(args):
    modulus = _csv_ints(args.modulus) if getattr(args, "modulus", None) else "default"
    try:
        return build_extension(args.q, args.m, modulus)
    except ValueError as e:
        raise InputError(str(e)) from None


def _subspaces(ctx, dims, args, rng: SplitMix64 | None, chain=False) -> SubspaceFamily:
    if getattr(args, "subspaces", None):
        mats = _read_mats(args.subspaces)
        if not mats:
            raise InputError(f"{args.subspaces}: no matrix found")
        S = mats[0]
        if S.nrows != len(dims):
            raise InputError(f"{args.subspaces}: {S.nrows} rows for {len(dims)} dimensions")
        fams = []
        for j, (row, s) in enumerate(zip(S.rows, dims)):
            if s > S.ncols or any(row[s:]):
                raise InputError(f"{args.subspaces}: row {j + 1} must hold {s} elements then zeros")
            fams.append(row[:s])
    else:
        draw = random_chain if chain else random_subspaces
        fams = draw(rng or SplitMix64(args.seed), ctx, dims)
    try:
        return SubspaceFamily.from_elements(ctx, fams)
    except ValueError as e:
        raise InputError(f"subspaces: {e}") from None


def _subspace_matrix(ctx, fam: SubspaceFamily) -> Mat:
    width = max(fam.dims)
    return Mat(ctx, tuple(D.elements + (0,) * (width - D.size) for D in fam.families), width)


def _check_dims(dims, n, m):
    if len(dims) != n:
        raise InputError(f"--dims has {len(dims)} entries, code length is {n}")
    if any(not 1 <= s <= m for s in dims):
        raise InputError(f"subspace dimensions must lie in 1..{m}")


def _gab_params(ctx, args, rng: SplitMix64) -> GabidulinParams:
    if getattr(args, "support", None):
        g = _csv_ints(args.support)
        if len(g) != args.n:
            raise InputError(f"--support has {len(g)} entries, expected n={args.n}")
        if any(not 0 <= x < ctx.order for x in g):
            raise InputError("support entries out of range")
    else:
        if args.n > ctx.m:
            raise InputError(f"n={args.n} exceeds m={ctx.m}: support not independent")
        g = random_independent(rng, ctx, args.n)
    try:
        return GabidulinParams(ctx, tuple(g), args.k)
    except ValueError as e:
        raise InputError(str(e)) from None


# -- subcommands ---------------------------------------------------------------


def cmd_field_check(args, out):
    ctx = _field(args)
    coeffs = ",".join(str(c) for c in ctx.modulus)
    out.write(f"ok q={ctx.q} m={ctx.m} modulus={format_poly(ctx.modulus)} coeffs={coeffs} generator={ctx.generator}\n")
    return EXIT_OK


def cmd_gab_gen(args, out):
    ctx = _field(args)
    params = _gab_params(ctx, args, SplitMix64(args.seed))
    out.write("# support: " + ",".join(map(str, params.g)) + "\n")
    out.write("# dual-support: " + ",".join(map(str, params.h)) + "\n")
    out.write("# generator\n")
    out.write(emit_matrix(params.generator))
    out.write("# parity-check\n")
    out.write(emit_matrix(params.parity_check))
    return EXIT_OK


def cmd_expand(args, out):
    C = _read_code(args.code)
    ctx = C.ctx
    if args.bases:
        mats = _read_mats(args.bases)
        Bm = mats[0]
        if Bm.nrows != C.length or Bm.ncols != ctx.m or Bm.base:
            raise InputError(f"{args.bases}: expected an ext matrix of shape {C.length}x{ctx.m}")
        try:
            bases = tuple(BasisSet(ctx, r) for r in Bm.rows)
        except ValueError as e:
            raise InputError(f"{args.bases}: {e}") from None
        fam = BasisFamily(ctx, bases, BasisSet.standard(ctx))
    else:
        fam = BasisFamily.uniform(ctx, C.length)
    out.write("# expanded-generator\n")
    out.write(emit_matrix(expand_generator(C, fam).code.generator))
    out.write("# expanded-parity-check\n")
    out.write(emit_matrix(expand_parity(C, fam)))
    return EXIT_OK


def cmd_rgss_gen(args, out):
    C = _read_code(args.code)
    ctx = C.ctx
    _check_dims(args.dims, C.length, ctx.m)
    fam = _subspaces(ctx, args.dims, args, None)
    R = rgss_generator(C, fam)
    out.write("# U: " + ",".join(str(u + 1) for u in R.U) + "\n")
    out.write("# subspaces\n")
    out.write(emit_matrix(_subspace_matrix(ctx, fam)))
    out.write("# completed-bases\n")
    out.write(emit_matrix(Mat(ctx, tuple(B.elements for B in R.bases.bases), ctx.m)))
    out.write("# G_U\n")
    out.write(emit_matrix(R.generator))
    return EXIT_OK


def cmd_rgss_bounds(args, out):
    if args.code:
        C = _read_code(args.code)
        ctx = C.ctx
        n, k, d = C.length, C.dimension, None
        rng = SplitMix64(args.seed)
    else:
        for name in ("q", "m", "n", "k"):
            if getattr(args, name) is None:
                raise InputError(f"--{name} is required without --code")
        ctx = _field(args)
        rng = SplitMix64(args.seed)
        params = _gab_params(ctx, args, rng)
        C = gab_code(params)
        n, k, d = params.n, params.k, params.d
    _check_dims(args.dims, n, ctx.m)
    b = rgss_bounds(ctx.q, ctx.m, n, k, args.dims, d)
    line = b.describe()
    feasible = ctx.order**k <= args.cap
    if feasible:
        fam = _subspaces(ctx, args.dims, args, rng)
        line += f" card={len(oracle_rgss(C, fam, args.cap))}"
    out.write(line + "\n")
    return EXIT_OK


def cmd_parent(args, out):
    ctx = _field(args)
    rng = SplitMix64(args.seed)
    params = _gab_params(ctx, args, rng)
    _check_dims(args.dims, params.n, ctx.m)
    fam = _subspaces(ctx, args.dims, args, rng, chain=True)
    try:
        P = parent_code(params, fam)
    except ValueError as e:
        raise InputError(str(e)) from None
    out.write("# beta: " + ",".join(map(str, P.beta)) + "\n")
    out.write(f"# parent code: length {P.length}, dimension {P.dimension}, d {P.d}\n")
    out.write("# T\n")
    out.write(emit_matrix(P.T))
    if args.map:
        R = rgss_generator(gab_code(params), fam)
        words = sorted(R.words())
        images = [parent_map(params, fam, c) for c in words]
        out.write("# f_b images of the RGSS codewords\n")
        out.write(emit_matrix(Mat(ctx, tuple(images), P.length)))
    return EXIT_OK


def cmd_oracle_verify(args, out):
    C = _read_code(args.code)
    ctx = C.ctx
    _check_dims(args.dims, C.length, ctx.m)
    size = ctx.order**C.dimension
    if size > args.cap:
        raise CapacityError(size, args.cap)
    fam = _subspaces(ctx, args.dims, args, None)
    R = rgss_generator(C, fam)
    got = R.words()
    want = oracle_rgss(C, fam, args.cap).as_set()
    if got == want:
        out.write(f"match: {len(got)} codewords\n")
        return EXIT_OK
    out.write(
        f"mismatch: algorithm {len(got)} codewords, oracle {len(want)}; "
        f"{len(got - want)} only in algorithm, {len(want - got)} only in oracle\n"
    )
    for w in sorted(got - want)[:5]:
        out.write("  algorithm-only: " + " ".join(map(str, w)) + "\n")
    for w in sorted(want - got)[:5]:
        out.write("  oracle-only: " + " ".join(map(str, w)) + "\n")
    return EXIT_MISMATCH


def cmd_cost(args, out):
    try:
        rep = attack_cost(args.q, args.m, args.n, args.k, args.kp, args.mode)
    except ValueError as e:
        raise InputError(str(e)) from None
    if args.format == "json":
        out.write(json.dumps(rep.to_dict(), sort_keys=True) + "\n")
    else:
        out.write(rep.to_text())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rgsskit", description="Rank-metric generalized subspace subcodes.")
    sub = p.add_subparsers(dest="command", required=True)

    def field_args(sp, required=True):
        sp.add_argument("--q", type=int, required=required)
        sp.add_argument("--m", type=int, required=required)
        sp.add_argument("--modulus", help="little-endian coefficients c0,...,cm")

    def gab_args(sp, required=True):
        field_args(sp, required)
        sp.add_argument("--n", type=int, required=required)
        sp.add_argument("--k", type=int, required=required)
        sp.add_argument("--support", help="comma-separated support elements")

    sp = sub.add_parser("field-check", help="build F_{q^m} and validate its modulus")
    field_args(sp)
    sp.set_defaults(func=cmd_field_check)

    sp = sub.add_parser("gab-gen", help="Gabidulin generator and Moore parity check")
    gab_args(sp)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_gab_gen)

    sp = sub.add_parser("expand", help="expanded generator and parity check of a code")
    sp.add_argument("--code", required=True)
    sp.add_argument("--bases", help="ext matrix with one basis per row")
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("rgss-gen", help="generator of C ∩ W")
    sp.add_argument("--code", required=True)
    sp.add_argument("--dims", type=_csv_ints, required=True)
    sp.add_argument("--subspaces")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_rgss_gen)

    sp = sub.add_parser("rgss-bounds", help="cardinality bounds (and oracle count when feasible)")
    gab_args(sp, required=False)
    sp.add_argument("--code")
    sp.add_argument("--dims", type=_csv_ints, required=True)
    sp.add_argument("--subspaces")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.set_defaults(func=cmd_rgss_bounds)

    sp = sub.add_parser("parent", help="parent code parity check T")
    gab_args(sp)
    sp.add_argument("--dims", type=_csv_ints, required=True)
    sp.add_argument("--subspaces")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--map", action="store_true", help="also emit f_b of every RGSS codeword")
    sp.set_defaults(func=cmd_parent)

    sp = sub.add_parser("oracle-verify", help="compare the construction against brute force")
    sp.add_argument("--code", required=True)
    sp.add_argument("--dims", type=_csv_ints, required=True)
    sp.add_argument("--subspaces")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.set_defaults(func=cmd_oracle_verify)

    sp = sub.add_parser("cost", help="enumeration attack cost report")
    sp.add_argument("--mode", choices=["semc", "gsic"], required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--kp", type=int, required=True, help="subcode dimension k'")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_cost)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return args.func(args, out)
    except InputError as e:
        err.write(f"error: {e}\n")
        return EXIT_INPUT
    except CapacityError as e:
        err.write(f"refused: {e}\n")
        return EXIT_CAPACITY


cli_dispatch = main


if __name__ == "__main__":
    sys.exit(main())
