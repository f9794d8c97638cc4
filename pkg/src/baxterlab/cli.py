"""Command-line front end: count, list, check, tree, verify, stats."""
from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
from typing import TextIO

from . import enumeration as en
from .gentree import (
    FAMILIES,
    RULES,
    TreeBudgetExceeded,
    DEFAULT_NODE_BUDGET,
    expand_rule,
    explicit_tree,
)
from .insertion import OracleLimitExceeded
from .perm import (
    BAXTER_PATTERNS,
    ContractError,
    PermutationParseError,
    Symmetry,
    format_perm,
    is_baxter,
    is_fixed,
    parse_perm,
    stats,
    vincular_occurrences,
)
from .verify import SUITES, run_suites

CLI_FAMILIES = ("baxter", "half", "quarter", "fpf-involution")
METHODS = ("formula", "tree", "brute")


class UsageError(Exception):
    pass


class Failure(Exception):
    pass


def _family_spec(name: str) -> en.FamilySpec:
    return {
        "baxter": en.BAXTER,
        "half": en.FamilySpec("baxter", Symmetry.ROTATE180),
        "quarter": en.FamilySpec("baxter", Symmetry.ROTATE90CW),
        "fpf-involution": en.FamilySpec("baxter", extra="fpf_involution"),
    }[name]


def _parse_range(text: str) -> list[int]:
    try:
        if ":" in text:
            lo, hi = (int(x) for x in text.split(":"))
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"--n expects an integer or LO:HI range, got {text!r}") from None


def _count(family: str, n: int, method: str, jobs: int) -> int | None:
    """Count by one method; None when the method does not apply."""
    if method == "formula":
        if family == "baxter":
            return en.baxter_count(n) if n >= 1 else None
        if family == "quarter":
            return en.quarter_turn_count(n) if n >= 1 else None
        if family == "fpf-involution":
            if n < 2:
                return None
            return en.fpf_involution_count(n // 2) if n % 2 == 0 else 0
        return None
    if method == "tree":
        if family == "baxter":
            return expand_rule("baxter", n - 1)[-1] if n >= 1 else None
        if family == "half":
            rule = "half_even" if n % 2 == 0 else "half_odd"
            return expand_rule(rule, n // 2)[-1]
        if family == "quarter":
            if n < 1:
                return None
            return expand_rule("quarter", (n - 1) // 4)[-1] if n % 4 == 1 else 0
        return None
    return en.brute_count(n, _family_spec(family), jobs=jobs)


def cmd_count(args, out: TextIO, err: TextIO) -> int:
    table = en.CountTable()
    methods = METHODS if args.method == "all" else (args.method,)
    for n in _parse_range(args.n):
        for method in methods:
            value = _count(args.family, n, method, args.jobs)
            if value is None:
                if args.method != "all":
                    raise Failure(f"method {method!r} is not available for family {args.family!r} at n={n}")
                continue
            table.append(en.CountRow(n, value, method))
    if args.format == "csv":
        out.write(table.to_csv())
    elif args.format == "json":
        for line in table.to_json_lines():
            out.write(line + "\n")
    elif len(table) == 1:
        out.write(f"{table[0].count}\n")
    else:
        for row in table:
            out.write(f"{row.n}\t{row.count}\t{row.method}\n")
    bad = table.disagreements()
    if bad:
        err.write(f"methods disagree at n={bad}\n")
        return 1
    return 0


def _members(family: str, n: int) -> list:
    if family == "fpf-involution":
        return sorted(en.family_members(n, _family_spec(family)))
    if family == "baxter":
        if n == 0:
            return [()]
        return sorted(explicit_tree("baxter", n - 1).level_perms(n - 1))
    if family == "half":
        tree_family = "half_even" if n % 2 == 0 else "half_odd"
        return sorted(explicit_tree(tree_family, n // 2).level_perms(n // 2))
    if n % 4 != 1:
        return []
    return sorted(explicit_tree("quarter", (n - 1) // 4).level_perms((n - 1) // 4))


def cmd_list(args, out: TextIO, err: TextIO) -> int:
    members = _members(args.family, args.n)
    if args.format == "json":
        for w in members:
            out.write(json.dumps({"perm": list(w)}) + "\n")
    elif args.format == "csv":
        out.write("perm\n")
        for w in members:
            out.write(f'"{format_perm(w)}"\n' if "," in format_perm(w) else f"{format_perm(w)}\n")
    else:
        for w in members:
            out.write(format_perm(w) + "\n")
    return 0


def cmd_check(args, out: TextIO, err: TextIO) -> int:
    w = args.perm
    occ = {str(p): vincular_occurrences(w, p) for p in BAXTER_PATTERNS}
    st = stats(w)
    fixed = [s.value for s in Symmetry if s is not Symmetry.IDENTITY and is_fixed(w, s)]
    baxter = is_baxter(w)
    if args.format == "json":
        record = {
            "perm": list(w),
            "baxter": baxter,
            "occurrences": {k: [list(t) for t in v] for k, v in occ.items()},
            "fixed_under": fixed,
            "ltr_max_positions": list(st.ltr_max_positions),
            "rtl_max_positions": list(st.rtl_max_positions),
            "ltr_min_positions": list(st.ltr_min_positions),
            "rtl_min_positions": list(st.rtl_min_positions),
            "descents": st.descents,
            "inverse_descents": st.inverse_descents,
        }
        out.write(json.dumps(record) + "\n")
        return 0
    out.write(f"perm\t{format_perm(w)}\n")
    out.write(f"baxter\t{'yes' if baxter else 'no'}\n")
    if not baxter:
        out.write("verdict\tnot Baxter\n")
    for name, found in occ.items():
        for t in found:
            out.write(f"occurrence\t{name}\t({','.join(str(x) for x in t)})\n")
    out.write(f"fixed_under\t{','.join(fixed) if fixed else '-'}\n")
    for field in ("ltr_max_positions", "rtl_max_positions", "ltr_min_positions", "rtl_min_positions"):
        out.write(f"{field}\t{','.join(str(x) for x in getattr(st, field)) or '-'}\n")
    out.write(f"descents\t{st.descents}\n")
    out.write(f"inverse_descents\t{st.inverse_descents}\n")
    return 0


def cmd_tree(args, out: TextIO, err: TextIO) -> int:
    if not args.explicit:
        sizes = expand_rule(args.rule, args.depth)
        if args.format == "json":
            for r, size in enumerate(sizes):
                out.write(json.dumps({"rank": r, "size": size}) + "\n")
        elif args.format == "csv":
            out.write("rank,size\n")
            for r, size in enumerate(sizes):
                out.write(f"{r},{size}\n")
        else:
            for r, size in enumerate(sizes):
                out.write(f"{r}\t{size}\n")
        return 0
    if args.rule not in FAMILIES:
        raise UsageError(f"--explicit needs a permutation family: {', '.join(sorted(FAMILIES))}")
    try:
        tree = explicit_tree(args.rule, args.depth, args.budget)
    except TreeBudgetExceeded as exc:
        raise Failure(str(exc)) from None
    if args.format == "json":
        lines = tree.to_json_lines()
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["rank", "perm", "parent", "label"])
        for line in tree.to_lines():
            writer.writerow(line.split("\t"))
        lines = buf.getvalue().splitlines()
    else:
        lines = tree.to_lines()
    for line in lines:
        out.write(line + "\n")
    return 0


def cmd_verify(args, out: TextIO, err: TextIO) -> int:
    checks = run_suites(args.suite, args.max_n)
    for c in checks:
        if args.format == "json":
            out.write(json.dumps({"suite": c.suite, "check": c.name, "ok": c.ok, "detail": c.detail}) + "\n")
        else:
            out.write(c.line() + "\n")
    failed = sum(not c.ok for c in checks)
    err.write(f"{len(checks) - failed} passed, {failed} failed\n")
    return 1 if failed else 0


def cmd_stats(args, out: TextIO, err: TextIO) -> int:
    table = en.stats_table(args.n, _family_spec(args.family), jobs=args.jobs)
    rows = sorted(table.items())
    if args.format == "json":
        for (d, e), c in rows:
            out.write(json.dumps({"descents": d, "inverse_descents": e, "count": c}) + "\n")
    elif args.format == "csv":
        out.write("descents,inverse_descents,count\n")
        for (d, e), c in rows:
            out.write(f"{d},{e},{c}\n")
    else:
        for (d, e), c in rows:
            out.write(f"{d}\t{e}\t{c}\n")
    return 0


def _perm_arg(text: str):
    try:
        return parse_perm(text)
    except PermutationParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="baxterlab", description="Baxter permutations and their symmetric subfamilies.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("lines", "json", "csv"), default="lines")

    p = sub.add_parser("count", help="count a family at length n")
    p.add_argument("--family", choices=CLI_FAMILIES, default="baxter")
    p.add_argument("--n", required=True, help="length, or LO:HI for a range")
    p.add_argument("--method", choices=METHODS + ("all",), default="formula")
    p.add_argument("--jobs", type=int, default=1)
    add_format(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("list", help="list the family members of length n")
    p.add_argument("--family", choices=CLI_FAMILIES, default="baxter")
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("check", help="pattern occurrences, symmetries and statistics of one permutation")
    p.add_argument("perm", type=_perm_arg)
    add_format(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("tree", help="rank sizes of a succession rule, or an explicit tree")
    p.add_argument("--rule", choices=sorted(RULES), required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--explicit", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    add_format(p)
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--format", choices=("lines", "json"), default="lines")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="(descents, inverse descents) table")
    p.add_argument("--family", choices=CLI_FAMILIES, default="baxter")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    add_format(p)
    p.set_defaults(func=cmd_stats)
    return parser


def run(argv: list[str], out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args, out, err)
    except UsageError as exc:
        err.write(f"baxterlab: usage error: {exc}\n")
        return 2
    except (Failure, ContractError, OracleLimitExceeded, en.BruteLimitExceeded, ValueError) as exc:
        err.write(f"baxterlab: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:], sys.stdout, sys.stderr))


if __name__ == "__main__":
    main()
