"""
Command line interface.

Subcommands:

* ``blocks``     list the blocks of TL_n(kappa),
* ``paths``      enumerate paths between two one-column multipartitions,
* ``decompose``  graded decomposition data of one block, cross-checked
                 against the path-counting oracle,
* ``svg``        draw the paths between two multipartitions.

Exit codes: 0 success, 2 configuration error, 3 cross-check mismatch,
4 path-closure budget exceeded.  Reports are byte-deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import svg as svg_mod
from .decomposition import (
    NoRegularMember,
    block_of,
    blocks,
    decomposition_matrix,
    kn_oracle,
    matrices_equal,
)
from .params import Params, ParamsError
from .paths import ClosureBudgetExceeded, paths_between
from .soergel import InternalMismatch

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_MISMATCH = 3
EXIT_BUDGET = 4


class _CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _parse_multipartition(text, l):
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise _CliError(EXIT_CONFIG, "bad multipartition %r" % text)
    if len(parts) != l or any(p < 0 for p in parts):
        raise _CliError(
            EXIT_CONFIG, "multipartition %r needs %d nonnegative parts" % (text, l)
        )
    return parts


def _params(args):
    try:
        kappa = tuple(int(x) for x in args.kappa.split(","))
    except ValueError:
        raise _CliError(EXIT_CONFIG, "bad multicharge %r" % args.kappa)
    try:
        return Params(args.l, args.e, kappa, args.n)
    except ParamsError as ex:
        raise _CliError(EXIT_CONFIG, str(ex))


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_dumps(data):
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


def cmd_blocks(args):
    params = _params(args)
    found = blocks(params, args.n)
    if args.format == "json":
        report = {
            "params": params.to_json(),
            "n": args.n,
            "blocks": [b.to_json() for b in found],
        }
        _emit(_json_dumps(report), args.out)
        return EXIT_OK
    lines = ["blocks of TL_%d, l=%d e=%d kappa=%s" % (args.n, params.l, params.e, list(params.kappa))]
    for idx, b in enumerate(found):
        lines.append("block %d:" % idx)
        for member, reg in zip(b.members, b.regular):
            lines.append(
                "  %s%s" % (list(member), "" if reg else "  (singular)")
            )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_paths(args):
    params = _params(args)
    lam = _parse_multipartition(args.lam, params.l)
    mu = _parse_multipartition(args.mu, params.l)
    if sum(lam) != args.n or sum(mu) != args.n:
        raise _CliError(EXIT_CONFIG, "multipartitions must have n=%d boxes" % args.n)
    try:
        found = paths_between(params, lam, mu, args.budget)
    except ClosureBudgetExceeded as ex:
        raise _CliError(EXIT_BUDGET, str(ex))
    if args.format == "json":
        report = {
            "params": params.to_json(),
            "lambda": list(lam),
            "mu": list(mu),
            "paths": [
                {"steps": list(p.steps), "degree": d} for p, d in found
            ],
        }
        _emit(_json_dumps(report), args.out)
        return EXIT_OK
    lines = ["paths from %s to %s: %d" % (list(mu), list(lam), len(found))]
    for p, d in found:
        lines.append("  %s  degree %d" % ("".join(str(s) for s in p.steps), d))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_decompose(args):
    params = _params(args)
    mu = _parse_multipartition(args.mu, params.l)
    if sum(mu) != args.n:
        raise _CliError(EXIT_CONFIG, "mu must have n=%d boxes" % args.n)
    block = block_of(params, args.n, mu)
    try:
        matrix = decomposition_matrix(params, block, args.budget)
        if args.oracle == "on":
            oracle = kn_oracle(params, block, args.budget)
            if not matrices_equal(matrix, oracle):
                raise _CliError(
                    EXIT_MISMATCH,
                    "recursion route and path-counting oracle disagree",
                )
    except ClosureBudgetExceeded as ex:
        raise _CliError(EXIT_BUDGET, str(ex))
    except InternalMismatch as ex:
        raise _CliError(EXIT_MISMATCH, str(ex))
    except NoRegularMember as ex:
        raise _CliError(EXIT_CONFIG, str(ex))
    if args.format == "json":
        report = matrix.to_json()
        report["cross_checked"] = args.oracle == "on"
        _emit(_json_dumps(report), args.out)
        return EXIT_OK
    _emit(_render_matrix_table(matrix), args.out)
    return EXIT_OK


def _render_matrix_table(matrix):
    block = matrix.block
    regs = block.regular_members()
    lines = ["block: %s" % [list(m) for m in block.members]]

    def table(title, getter, rows, cols):
        lines.append(title)
        header = ["lambda \\ mu"] + [str(list(mu)) for mu in cols]
        body = []
        for lam in rows:
            body.append([str(list(lam))] + [str(getter(lam, mu)) for mu in cols])
        widths = [
            max(len(row[c]) for row in [header] + body) for c in range(len(header))
        ]
        for row in [header] + body:
            lines.append(
                "  " + "  ".join(cell.ljust(w) for cell, w in zip(row, widths))
            )

    table("decomposition numbers d:", matrix.d, regs, regs)
    table("simple characters:", matrix.character, regs, regs)
    table("standard dimensions:", matrix.standard_dim, block.members, block.members)
    return "\n".join(lines) + "\n"


def cmd_svg(args):
    params = _params(args)
    mu = _parse_multipartition(args.mu, params.l)
    lam = _parse_multipartition(args.lam, params.l) if args.lam else mu
    if sum(lam) != args.n or sum(mu) != args.n:
        raise _CliError(EXIT_CONFIG, "multipartitions must have n=%d boxes" % args.n)
    try:
        text = svg_mod.render(params, lam, mu, args.budget)
    except svg_mod.RankTooHigh as ex:
        raise _CliError(EXIT_CONFIG, str(ex))
    except ClosureBudgetExceeded as ex:
        raise _CliError(EXIT_BUDGET, str(ex))
    _emit(text, args.out)
    return EXIT_OK


def _add_common(sub, with_budget=True):
    sub.add_argument("--l", type=int, required=True, help="number of components")
    sub.add_argument("--e", type=int, required=True, help="quantum characteristic")
    sub.add_argument("--kappa", required=True, help="comma separated multicharge")
    sub.add_argument("--n", type=int, required=True, help="number of boxes")
    sub.add_argument("--out", default=None, help="write the report to a file")
    if with_budget:
        sub.add_argument(
            "--budget",
            type=int,
            default=2 ** 20,
            help="cap on the size of path reflection closures",
        )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="quivertl",
        description="graded decomposition numbers of quiver Temperley-Lieb algebras",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_blocks = subs.add_parser("blocks", help="list blocks")
    _add_common(p_blocks, with_budget=False)
    p_blocks.add_argument("--format", choices=("table", "json"), default="table")
    p_blocks.set_defaults(func=cmd_blocks)

    p_paths = subs.add_parser("paths", help="enumerate paths between weights")
    _add_common(p_paths)
    p_paths.add_argument("--lambda", dest="lam", required=True)
    p_paths.add_argument("--mu", required=True)
    p_paths.add_argument("--format", choices=("table", "json"), default="table")
    p_paths.set_defaults(func=cmd_paths)

    p_dec = subs.add_parser("decompose", help="decomposition data of a block")
    _add_common(p_dec)
    p_dec.add_argument("--mu", required=True, help="a member of the block")
    p_dec.add_argument("--oracle", choices=("on", "off"), default="on")
    p_dec.add_argument("--format", choices=("table", "json"), default="table")
    p_dec.set_defaults(func=cmd_decompose)

    p_svg = subs.add_parser("svg", help="draw paths between weights")
    _add_common(p_svg)
    p_svg.add_argument("--lambda", dest="lam", default=None)
    p_svg.add_argument("--mu", required=True)
    p_svg.add_argument("--format", choices=("svg",), default="svg")
    p_svg.set_defaults(func=cmd_svg)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliError as ex:
        print("error: %s" % ex, file=sys.stderr)
        return ex.code
    except ValueError as ex:
        print("error: %s" % ex, file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
