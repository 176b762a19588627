"""Command line interface: enumeration, triangle tables, series expansion,
OEIS b-file export, and the cross-validation suite.

stdout carries data, stderr carries diagnostics.  Exit codes: 0 success,
1 verification failure or brute-force cap exceeded, 2 usage error,
3 reference-prefix mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from typing import Dict, List, Optional, Tuple

from . import catalog, counting, formulas, verify
from .compositions import Family
from .counting import BRUTE_FORCE_CAP, BruteForceCapExceeded
from .series import DEFAULT_ORDER

FAMILY_CHOICES = ("arndt", "k-arndt", "block-arndt", "antipalindromic",
                  "reduced-ap", "all")
FORMAT_CHOICES = ("plain", "csv", "jsonl")
SERIES_CHOICES = ("arndt", "antipalindromic", "reduced-ap", "last-part",
                  "total-parts", "total-last", "k-arndt", "block-arndt",
                  "distinct-parts", "compositions")
BFILE_CHOICES = ("arndt-total", "parts-triangle-flat", "last-sum")


def _family(args, parser) -> Family:
    needs_k = args.family in ("k-arndt", "block-arndt")
    if needs_k and args.k is None:
        parser.error(f"family '{args.family}' requires --k")
    if not needs_k and args.k is not None:
        parser.error(f"family '{args.family}' does not take --k")
    try:
        return Family(args.family, args.k)
    except ValueError as exc:
        parser.error(str(exc))


def _print_compositions(comps, fmt: str):
    for comp in comps:
        if fmt == "plain":
            print(f"({','.join(map(str, comp))})")
        elif fmt == "csv":
            print(",".join(map(str, comp)))
        else:
            print(json.dumps(list(comp)))


def _print_triangle(rows: Dict[int, Dict[int, int]], fmt: str):
    """Rows of (n -> {m: count}); zero cells are implicit."""
    if fmt == "csv":
        print("n,m,count")
        for n in sorted(rows):
            for m in sorted(rows[n]):
                print(f"{n},{m},{rows[n][m]}")
        return
    if fmt == "jsonl":
        for n in sorted(rows):
            counts = {str(m): rows[n][m] for m in sorted(rows[n])}
            print(json.dumps({"n": n, "counts": counts}))
        return
    # plain: an aligned grid; each row runs to its last nonzero column.
    max_m = max((max(row) for row in rows.values() if row), default=0)
    width = max([len(str(max_m)), len("n\\m")]
                + [len(str(v)) for row in rows.values() for v in row.values()])
    header = "  ".join(["n\\m".rjust(width)]
                       + [str(m).rjust(width) for m in range(max_m + 1)])
    print(header)
    for n in sorted(rows):
        row = rows[n]
        hi = max(row) if row else 0
        cells = [str(row.get(m, 0)).rjust(width) for m in range(hi + 1)]
        print("  ".join([str(n).rjust(width)] + cells))


def _print_sequence(values: List[Tuple[int, int]], fmt: str):
    if fmt == "csv":
        print("n,value")
        for n, v in values:
            print(f"{n},{v}")
    elif fmt == "jsonl":
        for n, v in values:
            print(json.dumps({"n": n, "value": v}))
    else:
        for n, v in values:
            print(f"{n} {v}")


def cmd_enumerate(args, parser) -> int:
    family = _family(args, parser)
    cap = args.max_n if args.max_n is not None else BRUTE_FORCE_CAP
    try:
        comps = [c for c in counting.compositions_of(args.n, cap)
                 if family.member(c)]
    except BruteForceCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _print_compositions(comps, args.format)
    return 0


def _parts_gf(family: Family):
    if family.kind == "arndt":
        return catalog.gf_arndt()
    if family.kind == "antipalindromic":
        return catalog.gf_antipalindromic()
    if family.kind == "reduced-ap":
        return catalog.gf_reduced_ap()
    if family.kind == "k-arndt":
        return catalog.gf_k_arndt(family.k)
    if family.kind == "block-arndt":
        return catalog.gf_k_block(family.k)
    return catalog.gf_compositions()


def cmd_table(args, parser) -> int:
    family = _family(args, parser)
    if args.kind == "last" and args.method in ("gf", "formula") \
            and family.kind != "arndt":
        parser.error("the last-part table has gf/formula paths only for "
                     "--family arndt; use --method brute")
    if args.kind == "parts" and args.method == "formula" \
            and family.kind != "arndt":
        parser.error("the formula path covers --family arndt only")
    cap = args.max_n if args.max_n is not None else BRUTE_FORCE_CAP
    try:
        if args.method == "brute":
            count = (counting.count_by_parts if args.kind == "parts"
                     else counting.count_by_last)
            rows = {n: count(n, family, cap) for n in range(args.n + 1)}
        elif args.method == "formula":
            if args.kind == "parts":
                rows = formulas.parts_triangle_by_recurrence(args.n).rows()
            else:
                rows = {n: {m: v for m in range(n + 1)
                            if (v := formulas.last_count(n, m))}
                        for n in range(args.n + 1)}
        else:
            gf = (_parts_gf(family) if args.kind == "parts"
                  else catalog.gf_last_part())
            rows = gf.expand(args.n).integer_rows()
    except BruteForceCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _print_triangle(rows, args.format)
    return 0


def cmd_series(args, parser) -> int:
    needs_k = args.name in ("k-arndt", "block-arndt", "distinct-parts")
    if needs_k and args.k is None:
        parser.error(f"series '{args.name}' requires --k")
    if not needs_k and args.k is not None:
        parser.error(f"series '{args.name}' does not take --k")
    try:
        if args.name == "k-arndt":
            gf = catalog.gf_k_arndt(args.k)
        elif args.name == "block-arndt":
            gf = catalog.gf_k_block(args.k)
        elif args.name == "distinct-parts":
            gf = catalog.gf_distinct_parts(args.k)
        elif args.name == "last-part":
            gf = catalog.gf_last_part()
        elif args.name == "total-parts":
            gf = catalog.gf_total_parts()
        elif args.name == "total-last":
            gf = catalog.gf_total_last()
        elif args.name == "antipalindromic":
            gf = catalog.gf_antipalindromic()
        elif args.name == "reduced-ap":
            gf = catalog.gf_reduced_ap()
        elif args.name == "compositions":
            gf = catalog.gf_compositions()
        else:
            gf = catalog.gf_arndt()
    except ValueError as exc:
        parser.error(str(exc))
    series = gf.expand(args.n)
    if args.name in ("total-parts", "total-last"):
        fmt = "plain" if args.format == "bfile" else args.format
        _print_sequence(list(enumerate(series.sequence())), fmt)
    else:
        if args.format == "bfile":
            parser.error("the bfile format applies only to univariate "
                         "sequences (total-parts, total-last)")
        _print_triangle(series.integer_rows(), args.format)
    return 0


def _load_reference(name: str) -> Tuple[dict, Dict[int, int]]:
    data = resources.files("arndt.data")
    meta = json.loads(data.joinpath("oeis.json").read_text())[name]
    prefix: Dict[int, int] = {}
    for line in data.joinpath(meta["file"]).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        idx, val = line.split()
        prefix[int(idx)] = int(val)
    return meta, prefix


def _bfile_values(name: str, count: int) -> List[Tuple[int, int]]:
    if count < 1:
        return []
    if name == "arndt-total":
        return [(n, formulas.fibonacci(n)) for n in range(1, count + 1)]
    if name == "last-sum":
        return [(n, formulas.total_last_closed(n)) for n in range(1, count + 1)]
    # parts-triangle-flat: row n covers at least one term for every n >= 1,
    # so building `count` rows always yields enough terms.
    triangle = formulas.parts_triangle_by_recurrence(max(count, 1))
    out = []
    idx = 1
    for n in range(1, triangle.max_row + 1):
        row = triangle.row(n)
        for m in range(1, max(row) + 1):
            out.append((idx, row.get(m, 0)))
            idx += 1
            if len(out) == count:
                return out
    return out


def cmd_bfile(args, parser) -> int:
    values = _bfile_values(args.sequence, args.n)
    for n, v in values:
        print(f"{n} {v}")
    if not args.check:
        return 0
    meta, prefix = _load_reference(args.sequence)
    compared = 0
    for n, v in values:
        if n not in prefix:
            continue
        if prefix[n] != v:
            print(f"error: {args.sequence} differs from {meta['a_number']} "
                  f"at index {n}: computed {v}, reference {prefix[n]}",
                  file=sys.stderr)
            return 3
        compared += 1
    print(f"checked {compared} terms against the {meta['a_number']} prefix: OK",
          file=sys.stderr)
    return 0


def cmd_verify(args, parser) -> int:
    results = verify.run_checks(args.scope, args.max_n)
    failed = 0
    for r in results:
        if r.passed:
            print(f"PASS  {r.name}")
        else:
            failed += 1
            print(f"FAIL  {r.name}: {r.detail}")
    total = len(results)
    if failed:
        print(f"{failed} of {total} checks failed")
        return 1
    print(f"all {total} checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arndt",
        description="Enumerate, tabulate, and cross-verify Arndt-type "
                    "integer compositions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate",
                       help="list the members of a family at one weight")
    p.add_argument("--n", type=int, required=True, help="weight to enumerate")
    p.add_argument("--family", choices=FAMILY_CHOICES, default="arndt")
    p.add_argument("--k", type=int, help="parameter for k-arndt/block-arndt")
    p.add_argument("--format", choices=FORMAT_CHOICES, default="plain")
    p.add_argument("--max-n", type=int, default=None,
                   help="raise the brute-force cap")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", help="triangle of counts for weights 0..N")
    p.add_argument("kind", choices=("parts", "last"),
                   help="statistic: number of parts, or last part")
    p.add_argument("--N", dest="n", type=int, required=True,
                   help="largest weight")
    p.add_argument("--family", choices=FAMILY_CHOICES, default="arndt")
    p.add_argument("--k", type=int)
    p.add_argument("--method", choices=("gf", "brute", "formula"),
                   default="gf")
    p.add_argument("--format", choices=FORMAT_CHOICES, default="plain")
    p.add_argument("--max-n", type=int, default=None,
                   help="raise the brute-force cap (brute method)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("series",
                       help="coefficients of a catalog generating function")
    p.add_argument("name", choices=SERIES_CHOICES)
    p.add_argument("--k", type=int)
    p.add_argument("--N", "--order", dest="n", type=int, default=DEFAULT_ORDER,
                   help=f"truncation order (default {DEFAULT_ORDER})")
    p.add_argument("--format", choices=FORMAT_CHOICES + ("bfile",),
                   default="plain")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("bfile",
                       help="emit a sequence in OEIS b-file format")
    p.add_argument("sequence", choices=BFILE_CHOICES)
    p.add_argument("--N", dest="n", type=int, required=True,
                   help="number of terms (b-file index runs from 1)")
    p.add_argument("--check", action="store_true",
                   help="compare against the bundled reference prefix")
    p.set_defaults(func=cmd_bfile)

    p = sub.add_parser("verify", help="run the cross-validation suite")
    p.add_argument("scope", nargs="?", choices=verify.SCOPES, default="all")
    p.add_argument("--max-n", type=int, default=None,
                   help="clamp the per-check weight ranges")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
