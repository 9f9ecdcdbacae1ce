"""Command line front end: ``gapsets {count,enumerate,verify,kunz}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from gapsets.admissibility import criterion_discrepancies
from gapsets.compact import compact_form, format_compact, kunz_of_semigroup
from gapsets.core import complement, format_gapset, is_gapset, multiplicity, parse_gapset
from gapsets.enumeration import (
    GENUS_CAP_ENV,
    ResourceLimitError,
    check_genus,
    count_table,
    enumerate_compact,
    enumerate_tree,
)
from gapsets.filtration import format_filtration, gapset_of
from gapsets.injection import verify_injection
from gapsets.tables import golden_mismatches

FORMATS = ("text", "csv", "json")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def cmd_count(args) -> int:
    check_genus(args.max_genus, args.genus_cap)
    ms = [args.multiplicity] if args.multiplicity else None
    max_m = args.multiplicity or args.max_genus + 1
    table = count_table(args.max_genus, max_m, jobs=args.jobs, cap=args.genus_cap)
    if args.format == "csv":
        text = table.multiplicity_csv(ms)
        if ms is None:
            text += "\n" + table.totals_csv()
    elif args.format == "json":
        text = table.to_json(ms)
    else:
        text = table.to_text(ms)
    _emit(text, args.out)
    return 0


def cmd_enumerate(args) -> int:
    check_genus(args.genus, args.genus_cap)
    if args.multiplicity:
        entries = []
        for f in enumerate_compact(args.multiplicity, args.genus):
            entries.append({
                "filtration": format_filtration(f),
                "gapset": format_gapset(gapset_of(f)),
                "compact": format_compact(compact_form(f)),
            })
        columns = ["filtration", "gapset", "compact"]
        plain = [e["filtration"] for e in entries]
    else:
        entries = []
        for g, level in enumerate_tree(args.genus, jobs=args.jobs, cap=args.genus_cap):
            if g != args.genus:
                continue
            for s in level:
                gaps = s.gaps()
                entries.append({"gapset": format_gapset(gaps), "multiplicity": multiplicity(gaps)})
        columns = ["gapset", "multiplicity"]
        plain = [e["gapset"] for e in entries]

    if args.format == "json":
        text = json.dumps(entries, indent=2) + "\n"
    elif args.format == "csv":
        text = _csv([columns] + [[e[c] for c in columns] for e in entries])
    else:
        text = "".join(line + "\n" for line in plain)
    _emit(text, args.out)
    return 0


def _verify_criterion(args) -> tuple[list[dict], list[str]]:
    checked, bad = criterion_discrepancies(args.max_m, args.max_sum)
    problems = [
        f"{format_compact(form)}: criterion={fast} brute_force={slow}"
        for form, fast, slow in bad
    ]
    result = {
        "check": "criterion",
        "max_m": args.max_m,
        "max_sum": args.max_sum,
        "checked": checked,
        "discrepancies": len(bad),
        "status": "PASS" if not bad else "FAIL",
    }
    return [result], problems


def _verify_injection(args) -> tuple[list[dict], list[str]]:
    ms = [args.multiplicity] if args.multiplicity else [3, 4]
    results, problems = [], []
    for m in ms:
        for g in range(args.max_genus + 1):
            report = verify_injection(m, g)
            row = report.to_dict()
            row["check"] = "injection"
            row["status"] = "PASS" if report.ok else "FAIL"
            results.append(row)
            if not report.ok:
                problems.append(
                    f"m={m} g={g} {report.map_used}: domain={report.domain_size} "
                    f"image={report.image_size} failures={report.failures}"
                )
    return results, problems


def _verify_tables(args) -> tuple[list[dict], list[str]]:
    table = count_table(args.max_genus, min(6, args.max_genus + 1), jobs=args.jobs, cap=args.genus_cap)
    problems = golden_mismatches(table)
    result = {
        "check": "tables",
        "max_genus": args.max_genus,
        "mismatches": len(problems),
        "status": "PASS" if not problems else "FAIL",
    }
    return [result], problems


def _result_line(row: dict) -> str:
    status = row["status"]
    detail = " ".join(f"{k}={v}" for k, v in row.items() if k not in ("status", "check", "failures"))
    return f"{status} {row['check']} {detail}"


def cmd_verify(args) -> int:
    if args.what == "criterion":
        results, problems = _verify_criterion(args)
    elif args.what == "injection":
        check_genus(args.max_genus + 1, args.genus_cap)
        results, problems = _verify_injection(args)
    else:
        check_genus(args.max_genus, args.genus_cap)
        results, problems = _verify_tables(args)

    if args.format == "json":
        text = json.dumps(results, indent=2) + "\n"
    elif args.format == "csv":
        columns = list(results[0])
        text = _csv([columns] + [[r[c] for c in columns] for r in results])
    else:
        text = "".join(_result_line(r) + "\n" for r in results)
        overall = "PASS" if not problems else "FAIL"
        text += f"{overall}\n"
    _emit(text, args.out)
    for line in problems:
        print(line, file=sys.stderr)
    return 0 if not problems else 1


def cmd_kunz(args) -> int:
    gaps = parse_gapset(args.gaps)
    if not is_gapset(gaps):
        print(f"error: {args.gaps!r} is not a gapset", file=sys.stderr)
        return 2
    kv = kunz_of_semigroup(complement(gaps))
    if args.format == "json":
        text = json.dumps({"m": kv.m, "k": list(kv.k)}) + "\n"
    elif args.format == "csv":
        text = _csv([kv.csv_header(), list(kv.k)])
    else:
        text = "k=(" + ",".join(map(str, kv.k)) + ")\n"
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for tree enumeration")
    common.add_argument(
        "--genus-cap", type=int,
        help=f"override the hard genus cap (default 35, or ${GENUS_CAP_ENV})",
    )

    parser = argparse.ArgumentParser(
        prog="gapsets",
        description="Gapsets, gapset filtrations and numerical semigroup counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="tabulate n_g, n'_g and n_{g,m}")
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--multiplicity", type=int, help="only this row of n_{g,m}")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", parents=[common], help="list gapsets or gapset filtrations")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--multiplicity", type=int, help="list filtrations of this multiplicity")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="machine checks with a nonzero exit on failure")
    vsub = p.add_subparsers(dest="what", required=True)
    v = vsub.add_parser("criterion", parents=[common], help="criterion vs brute force")
    v.add_argument("--max-m", type=int, default=6)
    v.add_argument("--max-sum", type=int, default=8)
    v = vsub.add_parser("injection", parents=[common], help="injections for m = 3, 4")
    v.add_argument("--multiplicity", type=int, choices=(3, 4))
    v.add_argument("--max-genus", type=int, default=30)
    v = vsub.add_parser("tables", parents=[common], help="compare counts with published tables")
    v.add_argument("--max-genus", type=int, default=15)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kunz", parents=[common], help="Kunz coordinates of a gapset")
    p.add_argument("--gaps", required=True, help="comma-separated gaps, e.g. 1,2,3,4,6,7,11")
    p.set_defaults(func=cmd_kunz)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
