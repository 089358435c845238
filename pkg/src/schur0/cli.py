"""Command-line interface: ``schur0 <command> ...``.

Exit codes: 0 success, 1 computational failure or size guard, 2 usage error.
With ``--format json`` stdout carries a single JSON document; diagnostics go
to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import kernel
from .algebra import (
    GuardExceeded,
    boundary_idempotents,
    build_table,
    format_fraction,
    ideal_closure,
    ideal_rank_formula,
    max_dim,
    quotient_algebra,
    quotient_rank_formula,
    table_to_json,
)
from .centralizers import (
    hecke0_build,
    nil_hecke_law_violations,
    nilhecke_graded_build,
    ntl_build,
    reduced_word,
    element_to_peaks,
    render_peaks,
)
from .core import OrbitMatrix, basis_size, enumerate_basis, parse_params, s0_multiply, star_multiply, t_multiply
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


def _emit(args, doc: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=1))
    else:
        print(text)


def _guard(n: int, r: int) -> None:
    size = basis_size(n, r)
    if size > max_dim():
        raise GuardExceeded(f"Xi({n},{r}) has {size} elements, above the cap of {max_dim()} "
                            "(raise SCHUR0_MAX_DIM)")


def _params(args, n: int):
    if args.t is None:
        return None
    try:
        return parse_params([Fraction(x) for x in args.t.split(",")], n)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --t value {args.t!r}: {exc}") from exc


def _matrix(text: str, flag: str) -> OrbitMatrix:
    try:
        return OrbitMatrix.parse(text)
    except ValueError as exc:
        raise UsageError(f"{flag}: cannot read matrix {text!r} ({exc})") from exc


# -- commands ----------------------------------------------------------------

def cmd_basis(args) -> int:
    _guard(args.n, args.r)
    basis = enumerate_basis(args.n, args.r)
    doc = {"n": args.n, "r": args.r, "count": len(basis), "basis": [m.literal() for m in basis]}
    _emit(args, doc, "\n".join([f"# {len(basis)} matrices in Xi({args.n},{args.r})"]
                               + [m.literal() for m in basis]))
    return 0


def cmd_mult(args) -> int:
    a, b = _matrix(args.A, "-A"), _matrix(args.B, "-B")
    for m, flag in ((a, "-A"), (b, "-B")):
        if m.n != args.n or m.r != args.r:
            print(f"{flag} = {m.literal()} is not in Xi({args.n},{args.r})", file=sys.stderr)
            return 1
    if args.product == "s0":
        res = s0_multiply(a, b)
    elif args.product == "star":
        res = star_multiply(a, b)
    else:
        t = _params(args, args.n)
        if t is None:
            raise UsageError("--product t needs --t")
        res = t_multiply(t, a, b)
    if res is None:
        _emit(args, {"coeff": "0", "matrix": None}, "0")
    else:
        coeff = format_fraction(res.coeff)
        text = res.matrix.literal() if res.coeff == 1 else f"{coeff} {res.matrix.literal()}"
        _emit(args, {"coeff": coeff, "matrix": res.matrix.literal()}, text)
    return 0


def cmd_table(args) -> int:
    _guard(args.n, args.r)
    table = build_table(args.n, args.r, args.product, _params(args, args.n))
    text = table_to_json(table)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"cannot write {args.out}: {exc}", file=sys.stderr)
            return 1
        print(f"wrote {table.name}: {table.dim} basis elements, {len(table.products)} "
              f"nonzero products to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.max_n, args.max_r)
    if args.format == "text":
        for c in report["checks"]:
            print(f"{c['status'].upper():4} {c['name']}  {c['detail']}  ({c['elapsed_ms']} ms)")
        print("ALL PASS" if report["passed"] else "SOME CHECKS FAILED")
    else:
        print(json.dumps(report, indent=1))
    return 0 if report["passed"] else 1


def _ideal_of(args):
    _guard(args.n, args.r)
    table = build_table(args.n, args.r)
    ideal = ideal_closure(table, [table.index[m] for m in boundary_idempotents(args.n, args.r)])
    return table, ideal


def cmd_ideal(args) -> int:
    table, ideal = _ideal_of(args)
    members = [table.basis[k].literal() for k in ideal.indices()]
    doc = {"n": args.n, "r": args.r, "rank": ideal.rank,
           "rank_formula": ideal_rank_formula(args.n, args.r), "basis": members}
    _emit(args, doc, "\n".join([f"# I({args.n},{args.r}): rank {ideal.rank}, "
                                f"formula {doc['rank_formula']}"] + members))
    return 0


def cmd_quotient(args) -> int:
    table, ideal = _ideal_of(args)
    quotient = quotient_algebra(table, ideal)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(table_to_json(quotient))
        except OSError as exc:
            print(f"cannot write {args.out}: {exc}", file=sys.stderr)
            return 1
    labels = [m.literal() for m in quotient.basis]
    doc = {"n": args.n, "r": args.r, "dim": quotient.dim,
           "dim_formula": quotient_rank_formula(args.n, args.r), "basis": labels}
    _emit(args, doc, "\n".join([f"# S0({args.n},{args.r})/I: dim {quotient.dim}, "
                                f"formula {doc['dim_formula']}"] + labels))
    return 0


def _perm_rows(table):
    rows = []
    for w in table.basis:
        rows.append({"w": list(w), "length": w.length(), "word": list(reduced_word(w)),
                     "matrix": table.matrices[w].literal()})
    return rows


def cmd_hecke(args) -> int:
    if args.graded:
        table = nilhecke_graded_build(args.r, check_law=False)
        bad = nil_hecke_law_violations(table)
    else:
        table = hecke0_build(args.r)
        bad = []
    rows = _perm_rows(table)
    doc = {"name": table.name, "r": args.r, "dim": table.dim, "basis": rows,
           "nonzero_products": len(table.products)}
    if args.graded:
        doc["nil_hecke_law_violations"] = [[list(u), list(v)] for u, v in bad]
    lines = [f"# {table.name}: dim {table.dim}, {len(table.products)} nonzero products"]
    lines += [f"{''.join(map(str, row['w']))}  l={row['length']}  "
              f"s{'s'.join(map(str, row['word'])) or '()'}  {row['matrix']}" for row in rows]
    if args.graded:
        lines.append(f"# nil-Hecke product law violated by {len(bad)} pairs")
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_ntl(args) -> int:
    table = ntl_build(args.r)
    rows = []
    for w in table.basis:
        m = table.matrices[w]
        rows.append({"w": list(w), "matrix": m.literal(),
                     "peaks": [list(p) for p in element_to_peaks(m)]})
    doc = {"name": table.name, "r": args.r, "dim": table.dim, "basis": rows}
    blocks = [f"# {table.name}: dim {table.dim}"]
    for row in rows:
        blocks.append(f"peaks {row['peaks']}\n{render_peaks(table.matrices[tuple(row['w'])])}")
    _emit(args, doc, "\n\n".join(blocks))
    return 0


# -- parser ------------------------------------------------------------------

def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schur0", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"schur0 ({kernel.BACKEND} kernel)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n=True, r=True, fmt="text"):
        if n:
            p.add_argument("-n", type=_positive, required=True)
        if r:
            p.add_argument("-r", type=_nonnegative, required=True)
        p.add_argument("--format", choices=("json", "text"), default=fmt)
        return p

    common(sub.add_parser("basis", help="list Xi(n, r)"))
    p = common(sub.add_parser("mult", help="multiply two orbit matrices"))
    p.add_argument("-A", required=True)
    p.add_argument("-B", required=True)
    p.add_argument("--product", choices=("s0", "star", "t"), default="s0")
    p.add_argument("--t", help="comma list of rationals p/q")
    p = common(sub.add_parser("table", help="structure table as JSON"))
    p.add_argument("--product", choices=("s0", "star", "t"), default="s0")
    p.add_argument("--t")
    p.add_argument("--out")
    p = common(sub.add_parser("verify", help="run verification suites"), n=False, r=False, fmt="json")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--max-n", type=_positive, default=3)
    p.add_argument("--max-r", type=_positive, default=3)
    p = common(sub.add_parser("quotient", help="S0(n, r) modulo the boundary ideal"))
    p.add_argument("--out")
    common(sub.add_parser("ideal", help="ideal generated by boundary idempotents"))
    p = common(sub.add_parser("hecke", help="centralizer at k_alpha of S0(r, r)"), n=False)
    p.add_argument("--graded", action="store_true", help="use the graded product instead")
    common(sub.add_parser("ntl", help="nil-Temperley-Lieb subalgebra"), n=False)
    return parser


COMMANDS = {
    "basis": cmd_basis, "mult": cmd_mult, "table": cmd_table, "verify": cmd_verify,
    "quotient": cmd_quotient, "ideal": cmd_ideal, "hecke": cmd_hecke, "ntl": cmd_ntl,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"schur0: error: {exc}", file=sys.stderr)
        return 2
    except (GuardExceeded, ValueError, AssertionError) as exc:
        print(f"schur0: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
