"""Command-line surface.

Four subcommands: orbit (sl2-data of one complex orbit), classify
(magical orbits of one real form), slodowy (parameter count vs expected
dimension), verify (the cross-check suite).  Output formats: an aligned
text table, csv with a header row, or a single json document.

Exit codes: 0 success, 1 verification mismatch, 2 argument or domain
error, 3 missing data.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from .crosscheck import run_all
from .dataset import evaluate_conditions, load_records
from .errors import DatasetSchemaError, DomainError, MissingDataError
from .magical import Verdict, classify_realform
from .moduli import rigidity_report
from .orbits import Partition, enumerate_signed_data, weighted_dynkin_from_partition
from .realforms import CLASSICAL_FAMILIES, EXCEPTIONAL_FORMS, describe
from .rootsystems import LieType
from .sl2data import dim_c_formula, dim_g0_formula, dim_v_rho_formula, multiplicities_formula

# ---------------------------------------------------------------- rendering


def _emit_table(rows: List[Tuple[str, str]]) -> str:
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _emit_grid(header: Sequence[str], body: List[Sequence[str]]) -> str:
    table = [list(header)] + [list(r) for r in body]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
             for row in table]
    return "\n".join(lines)


def _emit_csv(header: Sequence[str], body: List[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(body)
    return buf.getvalue().rstrip("\n")


def _print(text: str) -> None:
    sys.stdout.write(text + "\n")


# ---------------------------------------------------------------- commands


def cmd_orbit(args: argparse.Namespace) -> int:
    t = LieType.of(args.type, args.rank)
    p = Partition.parse(args.partition)
    wdd = weighted_dynkin_from_partition(t, p)
    n = multiplicities_formula(t, p)
    doc = {
        "type": t.name,
        "partition": str(p),
        "wdd": list(wdd.labels),
        "n": {str(j): n[j] for j in sorted(n)},
        "dim_c": dim_c_formula(t, p),
        "dim_g0": dim_g0_formula(t, p),
        "dim_v_rho": dim_v_rho_formula(t, p),
    }
    if args.format == "json":
        _print(json.dumps(doc))
        return 0
    rows = [("type", doc["type"]), ("partition", doc["partition"]),
            ("wdd", " ".join(str(x) for x in doc["wdd"]))]
    rows += [(f"n_{j}", str(n.get(j, 0))) for j in range(max(n) + 1)]
    rows += [("dim_c", str(doc["dim_c"])), ("dim_g0", str(doc["dim_g0"])),
             ("dim_v_rho", str(doc["dim_v_rho"]))]
    if args.format == "csv":
        _print(_emit_csv(("field", "value"), [list(r) for r in rows]))
    else:
        _print(_emit_table(rows))
    return 0


def _classify_rows_classical(family: str, params: Tuple[int, ...]) -> List[Dict]:
    rows = []
    for row in classify_realform(family, params):
        w = row.status.witness
        rows.append({
            "orbit": str(row.label),
            "verdict": str(row.status.verdict),
            "m_minus_h": w.m_minus_h,
            "g0_minus_2c": w.g0_minus_2c,
            "centralizer_compact": w.centralizer_compact,
            "even_triple": w.even_triple,
            "centralizer": str(row.status.centralizer),
            "sign_choices": row.data_count,
        })
    return rows


def _classify_rows_exceptional(family: str) -> List[Dict]:
    rows = []
    for rec in load_records():
        if rec.realform != family:
            continue
        ev = evaluate_conditions(rec)
        if not ev.all_hold:
            continue
        data = rec.sl2_data()
        even = all(j % 2 == 0 for j, _ in data.n)
        verdict = Verdict.EVEN_MAGICAL if even else Verdict.ODD_MAGICAL
        rows.append({
            "orbit": "wdd " + " ".join(str(x) for x in rec.wdd),
            "verdict": str(verdict),
            "m_minus_h": describe(family).s,
            "g0_minus_2c": data.dim_g0 - 2 * data.dim_c,
            "centralizer_compact": rec.centralizer_type.is_compact,
            "even_triple": even,
            "centralizer": str(rec.centralizer_type),
            "sign_choices": 1,
        })
    return rows


def cmd_classify(args: argparse.Namespace) -> int:
    family = args.family
    params = tuple(args.params)
    if family in EXCEPTIONAL_FORMS:
        if params:
            raise DomainError(f"{family} takes no parameters")
        name = family
        rows = _classify_rows_exceptional(family)
    else:
        if family not in CLASSICAL_FAMILIES:
            raise DomainError(f"unknown family {family!r}")
        name = describe(family, params).name
        rows = _classify_rows_classical(family, params)
    if args.format == "json":
        _print(json.dumps({"realform": name, "rows": rows}))
        return 0
    header = ("orbit", "verdict", "m-h", "g0-2c", "compact", "parity",
              "centralizer", "signs")
    body = [(r["orbit"], r["verdict"], str(r["m_minus_h"]), str(r["g0_minus_2c"]),
             "yes" if r["centralizer_compact"] else "no",
             "even" if r["even_triple"] else "odd",
             r["centralizer"], str(r["sign_choices"])) for r in rows]
    if args.format == "csv":
        _print(_emit_csv(header, body))
    else:
        _print(f"{name}: {len(rows)} magical orbit(s)")
        if body:
            _print(_emit_grid(header, body))
    return 0


def cmd_slodowy(args: argparse.Namespace) -> int:
    family = args.family
    params = tuple(args.params)
    if family in EXCEPTIONAL_FORMS:
        if not args.wdd:
            raise DomainError(f"{family} needs --wdd to pick the orbit")
        orbit = tuple(int(x) for x in args.wdd.split(","))
        report = rigidity_report(args.genus, family, params, orbit)
        orbit_str = "wdd " + " ".join(str(x) for x in orbit)
        signs = ""
    else:
        if not args.partition:
            raise DomainError("classical forms need --partition")
        p = Partition.parse(args.partition)
        data = enumerate_signed_data(family, params, p)
        if not data:
            raise DomainError(f"{p} does not meet {describe(family, params).name}")
        from .magical import extended_magical_status

        chosen = data[0]
        for signed in data:
            if extended_magical_status(family, params, p, signed).verdict.is_magical:
                chosen = signed
                break
        report = rigidity_report(args.genus, family, params, p, chosen)
        orbit_str = str(p)
        signs = str(chosen)
    doc = {
        "realform": describe(family, params).name,
        "orbit": orbit_str,
        "genus": report.genus,
        "slodowy_param_dim": report.slodowy_param_dim,
        "expected_dim": report.expected_dim,
        "gap": report.gap,
        "milnor_wood": report.milnor_wood,
        "dim_c_cap_h": report.dim_c_cap_h,
        "a": {str(w): v for w, v in report.a},
    }
    if signs:
        doc["signs"] = signs
    if args.format == "json":
        _print(json.dumps(doc))
        return 0
    rows = [(k, json.dumps(v) if isinstance(v, dict) else str(v))
            for k, v in doc.items()]
    if args.format == "csv":
        _print(_emit_csv(("field", "value"), [list(r) for r in rows]))
    else:
        _print(_emit_table(rows))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if not 1 <= args.max_rank <= 8:
        raise DomainError(f"--max-rank must lie in 1..8, got {args.max_rank}")
    results = run_all(args.max_rank)
    failures = [r for r in results if not r.passed]
    if args.format == "json":
        _print(json.dumps({"checks": [
            {"name": r.name, "passed": r.passed, "cases": r.cases, "detail": r.detail}
            for r in results], "mismatches": len(failures)}))
        return 1 if failures else 0
    header = ("check", "status", "cases", "detail")
    body = [(r.name, "PASS" if r.passed else "FAIL", str(r.cases), r.detail)
            for r in results]
    if args.format == "csv":
        _print(_emit_csv(header, body))
    else:
        _print(_emit_grid(header, body))
        _print(f"{len(failures)} mismatches")
    return 1 if failures else 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sl2magical",
        description="Extended magical sl2-triples: orbits, classification, "
                    "Slodowy dimension arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = {"choices": ("json", "csv", "table"), "default": "table"}

    p_orbit = sub.add_parser("orbit", help="sl2-data of one complex nilpotent orbit")
    p_orbit.add_argument("type", choices=("A", "B", "C", "D"))
    p_orbit.add_argument("rank", type=int)
    p_orbit.add_argument("--partition", required=True,
                         help="e.g. 2,2,1 or 2^2,1")
    p_orbit.add_argument("--format", **fmt)
    p_orbit.set_defaults(func=cmd_orbit)

    p_cls = sub.add_parser("classify", help="magical orbits of one real form")
    p_cls.add_argument("family",
                       help="su, sl, sustar, so, sostar, spr, sp, or e.g. E6^-14")
    p_cls.add_argument("params", type=int, nargs="*")
    p_cls.add_argument("--format", **fmt)
    p_cls.set_defaults(func=cmd_classify)

    p_slo = sub.add_parser("slodowy", help="parameter count vs expected dimension")
    p_slo.add_argument("family")
    p_slo.add_argument("params", type=int, nargs="*")
    p_slo.add_argument("--partition", help="orbit partition (classical forms)")
    p_slo.add_argument("--wdd", help="orbit diagram labels (exceptional forms)")
    p_slo.add_argument("--genus", type=int, required=True)
    p_slo.add_argument("--format", **fmt)
    p_slo.set_defaults(func=cmd_slodowy)

    p_ver = sub.add_parser("verify", help="run the consistency suite")
    p_ver.add_argument("--max-rank", type=int, default=6)
    p_ver.add_argument("--format", **fmt)
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MissingDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DatasetSchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
