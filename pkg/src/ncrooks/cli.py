"""Command-line interface.

Exit status: 0 on success, 1 on a semantic failure (non-extendable rook,
failed verification), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import ncsym, partitions as P, rooks as R, verify
from .errors import NCRooksError, NotExtendable

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FILTERS = {
    "all": lambda pi: True,
    "atomic": P.is_atomic,
    "extendable": lambda pi: pi.n > 0 and R.is_extendable(R.partition_to_rook(pi)),
    "unsplitable": P.is_unsplitable,
}

MAX_ENUMERATE_N = 12
MAX_MATRIX_N = 8


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _parse(kind: str, text: str):
    if kind == "partition":
        return P.parse_partition(text)
    if kind == "rgf":
        return P.from_rgf(P.parse_rgf(text))
    return R.rook_to_partition(R.rook_from_json(text))


def _render(kind: str, pi: P.SetPartition) -> str:
    if kind == "partition":
        return P.format_partition(pi)
    if kind == "rgf":
        return P.format_rgf(P.to_rgf(pi))
    return R.rook_to_json(R.partition_to_rook(pi))


def cmd_enumerate(args) -> int:
    if not 0 <= args.n <= MAX_ENUMERATE_N:
        raise UsageError(f"--n must lie in [0, {MAX_ENUMERATE_N}]")
    keep = FILTERS[args.filter]
    found = [P.format_partition(pi) for pi in P.enumerate_partitions(args.n) if keep(pi)]
    if args.json:
        print(_dump({"n": args.n, "filter": args.filter, "partitions": found, "count": len(found)}))
    else:
        for text in found:
            print(text)
        print(f"count: {len(found)}")
    return EXIT_OK


def cmd_convert(args) -> int:
    pi = _parse(args.from_, args.value)
    out = _render(args.to, pi)
    if args.json:
        value = json.loads(out) if args.to == "rook" else out
        print(_dump({"format": args.to, "value": value}))
    else:
        print(out)
    return EXIT_OK


def cmd_product(args) -> int:
    if args.op == "edsum":
        result = R.rook_to_json(R.edsum(R.rook_from_json(args.a), R.rook_from_json(args.b)))
        value = json.loads(result)
    else:
        fn = P.slash if args.op == "slash" else P.split
        result = P.format_partition(fn(P.parse_partition(args.a), P.parse_partition(args.b)))
        value = result
    print(_dump({"op": args.op, "value": value}) if args.json else result)
    return EXIT_OK


def cmd_factor(args) -> int:
    pi = P.parse_partition(args.value)
    if pi.n == 0:
        raise UsageError("cannot factor the trivial partition")
    fn = P.atomic_factor if args.op == "atomic" else P.unsplitable_factor
    factors = [P.format_partition(f) for f in fn(pi)]
    if args.json:
        print(_dump({"op": args.op, "input": P.format_partition(pi), "factors": factors}))
    else:
        print(" ".join(factors))
    return EXIT_OK


def cmd_extend(args) -> int:
    rook = R.rook_from_json(args.rook)
    if rook.is_unit:
        raise UsageError("the unit rook (board -1) has no extension")
    try:
        perm = R.extend(rook)
    except NotExtendable as exc:
        k, i, j = exc.certificate
        if args.json:
            print(_dump({"extendable": False, "certificate": {"k": k, "i": i, "j": j}}))
        else:
            print(f"not extendable: i_{k}={i}, j_{k}={j}")
        return EXIT_FAIL
    cols = list(perm.column_of)
    print(_dump({"extendable": True, "column_of": cols}) if args.json else _dump(cols))
    return EXIT_OK


def cmd_expand(args) -> int:
    if args.k < 1:
        raise UsageError("--k must be positive")
    pi = P.parse_partition(args.value)
    fn = ncsym.expand_p if args.basis == "p" else ncsym.expand_m
    f = fn(pi, args.k)
    if args.json:
        print(_dump({**ncsym.polynomial_to_dict(f), "term_count": len(f)}))
    else:
        print(ncsym.format_polynomial(f))
        print(f"terms: {len(f)}")
    return EXIT_OK


def cmd_basis_matrix(args) -> int:
    if not 1 <= args.n <= MAX_MATRIX_N:
        raise UsageError(f"--n must lie in [1, {MAX_MATRIX_N}]")
    mat = ncsym.zeta_matrix(args.n) if args.op == "zeta" else ncsym.mu_matrix(args.n)
    order = [P.format_partition(pi) for pi in mat.order]
    if args.json:
        print(_dump({"n": args.n, "kind": args.op, "order": order, "entries": mat.dense()}))
    else:
        print("order: " + " ".join(order))
        for row in mat.dense():
            print(" ".join(f"{x:>3}" for x in row))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        report = verify.run_suite(args.suite, args.max)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        print(report.to_json(separators=(",", ":")))
    else:
        print(report.summary())
        if args.suite == "counts":
            print(verify.count_table(args.max).render())
        for failure in report.failures:
            print(f"  counterexample: {failure}")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_count(args) -> int:
    try:
        table = verify.count_table(args.max)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(_dump(table.to_dict()) if args.json else table.render())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit canonical JSON")

    parser = argparse.ArgumentParser(
        prog="ncrooks",
        description="Set partitions, triangular rooks and NCSym: conversions and exhaustive checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list partitions of [n]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", choices=sorted(FILTERS), default="all")
    p.set_defaults(func=cmd_enumerate)

    formats = ["partition", "rgf", "rook"]
    p = sub.add_parser("convert", parents=[common], help="convert between encodings")
    p.add_argument("value")
    p.add_argument("--from", dest="from_", choices=formats, required=True)
    p.add_argument("--to", choices=formats, required=True)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("product", parents=[common], help="slash, split or edsum product")
    p.add_argument("--op", choices=["slash", "split", "edsum"], required=True)
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("factor", parents=[common], help="atomic or unsplitable factorization")
    p.add_argument("--op", choices=["atomic", "unsplitable"], required=True)
    p.add_argument("value")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("extend", parents=[common], help="complete a rook to a permutation")
    p.add_argument("rook", help='rook JSON, e.g. {"board":2,"ones":[[1,2]]}')
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("expand", parents=[common], help="expand p_pi or m_pi in k variables")
    p.add_argument("--basis", choices=["p", "m"], required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("value")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("basis-matrix", parents=[common], help="print the zeta or mu matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--op", choices=["zeta", "mu"], default="zeta")
    p.set_defaults(func=cmd_basis_matrix)

    p = sub.add_parser("verify", parents=[common], help="run an exhaustive verification suite")
    p.add_argument("--suite", choices=sorted(verify.SUITES), required=True)
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", parents=[common], help="atomic/extendable/unsplitable counts")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_count)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, NCRooksError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
