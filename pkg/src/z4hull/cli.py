"""Command-line front end: factor, types, etable, hull, verify.

Machine-readable by default (JSON), with csv and plain renderings.  Data
goes to stdout, diagnostics to stderr.  Exit codes: 0 success, 1 a
verification check failed, 2 usage or validation error.  Range commands
fan per-n work out to a thread pool and emit rows in ascending n
regardless of completion order.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import verify as verify_mod
from .analytics import average_dim2, type_set_by_k1
from .arith import b_n, is_in_n2
from .code import code_from_fg
from .factor import factor_table
from .poly import PolyZ4


class CLIError(Exception):
    """Usage or validation failure; maps to exit code 2."""


def dump_json(obj) -> str:
    """Canonical JSON: two-space indent, insertion-ordered keys, trailing
    newline.  Parsing and re-rendering is byte-identical."""
    return json.dumps(obj, indent=2) + "\n"


def dump_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def format_fraction(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _parse_length(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise CLIError(f"length must be an integer, got {text!r}")
    if n < 1 or n % 2 == 0:
        raise CLIError("length must be odd")
    return n


def _parse_range(text: str, limit: int = 10**6):
    """A single odd n or an inclusive range "a..b"; even endpoints round
    inward with a warning."""
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise CLIError(f"range endpoints must be integers, got {text!r}")
        if lo % 2 == 0:
            print(f"warning: rounding even endpoint {lo} up to {lo + 1}", file=sys.stderr)
            lo += 1
        if hi % 2 == 0:
            print(f"warning: rounding even endpoint {hi} down to {hi - 1}", file=sys.stderr)
            hi -= 1
        if lo < 1 or hi < lo:
            raise CLIError(f"empty or invalid range {text!r}")
        ns = list(range(lo, hi + 1, 2))
    else:
        ns = [_parse_length(text)]
    if any(n > limit for n in ns):
        raise CLIError(f"length must be at most {limit}")
    return ns


def _fan_out(ns, fn):
    if len(ns) == 1:
        return [fn(ns[0])]
    workers = min(8, os.cpu_count() or 1, len(ns))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(fn, ns))
    return [row for _, row in sorted(zip(ns, rows))]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_factor(args) -> int:
    n = _parse_length(args.n)
    if n > 10**6:
        raise CLIError("length must be at most 10^6")
    table = factor_table(n)
    obj = {
        "n": n,
        "selfrec": [{"j": j, "poly": str(p)} for j, p in table.selfrec],
        "pairs": [
            {"j": j, "f": str(f), "fstar": str(fs)} for j, f, fs in table.pairs
        ],
    }
    if args.format == "json":
        sys.stdout.write(dump_json(obj))
    elif args.format == "csv":
        rows = [("n", "j", "kind", "poly", "fstar")]
        rows += [(n, j, "self", str(p), "") for j, p in table.selfrec]
        rows += [(n, j, "pair", str(f), str(fs)) for j, f, fs in table.pairs]
        sys.stdout.write(dump_csv(rows))
    else:
        print(f"x^{n}-1 over Z4 ({table.s} self-reciprocal, {table.t} pairs)")
        for j, p in table.selfrec:
            print(f"  selfrec j={j}: {p}")
        for j, f, fs in table.pairs:
            print(f"  pair    j={j}: {f} | {fs}")
    return 0


def cmd_types(args) -> int:
    ns = _parse_range(args.n)

    def row(n):
        groups = type_set_by_k1(n)
        return {
            "n": n,
            "groups": [{"k1": k1, "k2": k2s} for k1, k2s in groups.items()],
        }

    rows = _fan_out(ns, row)
    if args.format == "json":
        sys.stdout.write(dump_json(rows if len(rows) > 1 else rows[0]))
    elif args.format == "csv":
        out = [("n", "k1", "k2")]
        for r in rows:
            for g in r["groups"]:
                out.append((r["n"], g["k1"], " ".join(map(str, g["k2"]))))
        sys.stdout.write(dump_csv(out))
    else:
        for r in rows:
            for i, g in enumerate(r["groups"]):
                head = f"n={r['n']:<4}" if i == 0 else " " * 6
                print(f"{head} k1={g['k1']}: {','.join(map(str, g['k2']))}")
    return 0


def cmd_etable(args) -> int:
    ns = _parse_range(args.n, limit=10**6)

    def row(n):
        e = average_dim2(n)
        r = {
            "n": n,
            "b_n": b_n(n),
            "e": format_fraction(e),
            "e_num": e.numerator,
            "e_den": e.denominator,
            "in_n2": is_in_n2(n),
        }
        if args.float:
            r["e_float"] = float(e)
        return r

    rows = _fan_out(ns, row)
    if args.format == "json":
        sys.stdout.write(dump_json(rows if len(rows) > 1 else rows[0]))
    elif args.format == "csv":
        header = ["n", "B_n", "E_num", "E_den", "in_N2"]
        if args.float:
            header.append("E_float")
        out = [tuple(header)]
        for r in rows:
            line = [r["n"], r["b_n"], r["e_num"], r["e_den"], r["in_n2"]]
            if args.float:
                line.append(r["e_float"])
            out.append(tuple(line))
        sys.stdout.write(dump_csv(out))
    else:
        for r in rows:
            extra = f"  ({r['e_float']:.6f})" if args.float else ""
            flag = "N2" if r["in_n2"] else "  "
            print(f"n={r['n']:<5} B_n={r['b_n']:<5} E(n)={r['e']:<8} {flag}{extra}")
    return 0


def cmd_hull(args) -> int:
    n = _parse_length(args.n)
    if n > 10**6:
        raise CLIError("length must be at most 10^6")
    table = factor_table(n)
    try:
        f = PolyZ4.parse(args.f)
        g = PolyZ4.parse(args.g)
    except ValueError as exc:
        raise CLIError(str(exc))
    try:
        c = code_from_fg(table, f, g)
    except ValueError as exc:
        raise CLIError(str(exc))
    dual = c.dual()
    hull = c.hull()
    ht = hull.type_of()

    def gen_obj(code):
        first, second = code.factored_generator_strings()
        pair = code.generators()
        from .poly import fold_mod

        return {
            "first": first,
            "second": second,
            "first_expanded": str(fold_mod(pair.a, n)),
            "second_expanded": str(fold_mod(PolyZ4([2]) * pair.b, n)),
        }

    obj = {
        "n": n,
        "code": gen_obj(c),
        "dual": gen_obj(dual),
        "hull": {
            **gen_obj(hull),
            "type": {"k1": ht.k1, "k2": ht.k2},
            "dim2": hull.dim2(),
        },
    }
    if args.format == "json":
        sys.stdout.write(dump_json(obj))
    elif args.format == "csv":
        rows = [
            ("part", "first", "second", "k1", "k2", "dim2"),
            ("code", obj["code"]["first"], obj["code"]["second"], "", "", ""),
            ("dual", obj["dual"]["first"], obj["dual"]["second"], "", "", ""),
            ("hull", obj["hull"]["first"], obj["hull"]["second"], ht.k1, ht.k2, hull.dim2()),
        ]
        sys.stdout.write(dump_csv(rows))
    else:
        print(f"code: <{obj['code']['first']}, {obj['code']['second']}>")
        print(f"dual: <{obj['dual']['first']}, {obj['dual']['second']}>")
        print(f"hull: <{obj['hull']['first']}, {obj['hull']['second']}>")
        print(f"hull type: 4^{ht.k1} 2^{ht.k2}   dim2 = {hull.dim2()}")
    return 0


def cmd_verify(args) -> int:
    level = args.level
    max_n = args.max
    if max_n is not None:
        if level == "codeword" and max_n > verify_mod.CODEWORD_MAX:
            raise CLIError(f"codeword level supports --max <= {verify_mod.CODEWORD_MAX}")
        if level == "bounds" and max_n > verify_mod.SWEEP_MAX:
            raise CLIError(f"bounds level supports --max <= {verify_mod.SWEEP_MAX}")
    results = verify_mod.run_level(level, max_n)
    ok = all(r.ok for r in results)
    if args.format == "json":
        sys.stdout.write(
            dump_json(
                {
                    "level": level,
                    "ok": ok,
                    "checks": [
                        {"name": r.name, "ok": r.ok, "detail": r.detail}
                        for r in results
                    ],
                }
            )
        )
    elif args.format == "csv":
        rows = [("ok", "name", "detail")]
        rows += [(r.ok, r.name, r.detail) for r in results]
        sys.stdout.write(dump_csv(rows))
    else:
        for r in results:
            status = "PASS" if r.ok else "FAIL"
            detail = f" ({r.detail})" if r.detail else ""
            print(f"{status} {r.name}{detail}")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="z4hull",
        description="Hulls of cyclic codes of odd length over Z4: "
        "factor tables, hull types, counts and exact averages.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_format(sp):
        sp.add_argument(
            "--format",
            choices=("json", "csv", "plain"),
            default="json",
            help="output format (default json)",
        )

    sp = sub.add_parser("factor", help="factor x^n-1 over Z4, grouped by divisor")
    sp.add_argument("n", help="odd length")
    add_format(sp)
    sp.set_defaults(fn=cmd_factor)

    sp = sub.add_parser("types", help="achievable hull types for odd n or a..b")
    sp.add_argument("n", help="odd length or inclusive range a..b")
    add_format(sp)
    sp.set_defaults(fn=cmd_types)

    sp = sub.add_parser("etable", help="B_n and exact E(n) for odd n or a..b")
    sp.add_argument("n", help="odd length or inclusive range a..b")
    sp.add_argument("--float", action="store_true", help="add a decimal column")
    add_format(sp)
    sp.set_defaults(fn=cmd_etable)

    sp = sub.add_parser("hull", help="dual and hull of the code <f*g, 2f>")
    sp.add_argument("--n", required=True, help="odd length")
    sp.add_argument("--f", required=True, help="polynomial text for f")
    sp.add_argument("--g", required=True, help="polynomial text for g")
    add_format(sp)
    sp.set_defaults(fn=cmd_hull)

    sp = sub.add_parser("verify", help="run the cross-check suite")
    sp.add_argument(
        "--level", choices=verify_mod.LEVELS, default="all", help="check level"
    )
    sp.add_argument("--max", type=int, default=None, help="sweep limit for the level")
    add_format(sp)
    sp.set_defaults(fn=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
