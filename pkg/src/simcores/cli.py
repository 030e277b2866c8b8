"""Command-line interface: ``simcores cores|qcat|stats|shi|verify``.

Exit status is 0 on success, 1 when a check finds a counterexample or an
internal invariant fails, and 2 on bad input.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from .abacus import Family
from .enumeration import CoreFamily, enumerate_cores, expected_count
from .errors import DomainError, InvariantError
from .partitions import Partition, a_core_of, is_core, is_self_conjugate, parse_partition
from .qpoly import rational_q_catalan
from .shi import DominantAlcove, ShiConfig, enumerate_dominant, right_descents
from .stats import co_skew_length, ell, maj_A, maj_C, skew_length
from .verify import CLAIMS, Grid, run_claims

CSV_COLUMNS = ["partition", "size", "length", "sl", "sl_prime", "maj_a", "maj_c"]

# options whose values may start with a minus sign
_VALUE_OPTIONS = ("--window", "--partition", "--eval")


def _parse_ints(text: str) -> list[int]:
    text = text.strip().strip("()[]")
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise DomainError(f"not a comma-separated list of integers: {text!r}") from exc


def core_stats(p: Partition, a: int, b: int) -> dict:
    """Length, skew lengths and the maj statistics that apply to an (a,b)-core.

    maj_a needs b = a+1; maj_c needs in addition a even and a self-conjugate core.
    """
    row: dict = {"partition": list(p), "size": p.size, "length": ell(p),
                 "sl": None, "sl_prime": None, "maj_a": None, "maj_c": None}
    if a < b:
        row["sl"] = skew_length(p, a, b)
        row["sl_prime"] = co_skew_length(p, a, b)
    if b == a + 1:
        row["maj_a"] = maj_A(p, a)
        if a % 2 == 0 and is_self_conjugate(p):
            row["maj_c"] = maj_C(p, a // 2)
    return row


def _csv_cell(key: str, value) -> str:
    if value is None:
        return ""
    if key == "partition":
        return ",".join(map(str, value))
    return str(value)


def cmd_cores_list(args) -> int:
    fam = CoreFamily(args.a, args.b, args.self_conjugate)
    rows = [core_stats(p, args.a, args.b) if (args.stats or args.format != "text")
            else {"partition": list(p)} for p in enumerate_cores(fam)]
    if args.format == "json":
        if not args.stats:
            rows = [{"partition": r["partition"], "size": r["size"], "length": r["length"]} for r in rows]
        print(json.dumps(rows))
    elif args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(CSV_COLUMNS)
        for r in rows:
            w.writerow([_csv_cell(k, r[k]) for k in CSV_COLUMNS])
    else:
        for r in rows:
            line = str(Partition(r["partition"]))
            if args.stats:
                line += "".join(f" {k}={r[k]}" for k in CSV_COLUMNS[1:] if r[k] is not None)
            print(line)
    return 0


def cmd_cores_count(args) -> int:
    fam = CoreFamily(args.a, args.b, args.self_conjugate)
    enumerated = sum(1 for _ in enumerate_cores(fam))
    formula = expected_count(fam)
    print(f"enumerated {enumerated}")
    print(f"formula {formula}")
    if enumerated != formula:
        print(f"count mismatch for {fam}", file=sys.stderr)
        return 1
    return 0


def cmd_cores_reduce(args) -> int:
    if args.a < 1:
        raise DomainError("a must be positive")
    print(a_core_of(parse_partition(args.partition), args.a))
    return 0


def cmd_qcat(args) -> int:
    poly = rational_q_catalan(args.a, args.b)
    if args.eval is not None:
        print(poly(args.eval))
    elif args.format == "json":
        print(json.dumps(poly.to_json()))
    else:
        print(poly)
    return 0


def cmd_stats(args) -> int:
    p = parse_partition(args.partition)
    if not (is_core(p, args.a) and is_core(p, args.b)):
        raise DomainError(f"{p} is not an ({args.a},{args.b})-core")
    if not args.a < args.b:
        raise DomainError("stats needs a < b")
    row = core_stats(p, args.a, args.b)
    if args.format == "json":
        print(json.dumps(row))
    else:
        for k in ("length", "sl", "sl_prime", "maj_a", "maj_c"):
            if row[k] is not None:
                print(f"{'ell' if k == 'length' else k}={row[k]}")
    return 0


def _shi_config(args) -> ShiConfig:
    return ShiConfig(Family(args.family), args.rank, getattr(args, "m", 1))


def cmd_shi_alcoves(args) -> int:
    cfg = _shi_config(args)
    which = "bounded" if args.bounded else "minimal"
    alcoves = list(enumerate_dominant(cfg, which))
    if args.format == "json":
        print(json.dumps([a.to_json() for a in alcoves]))
    else:
        for a in alcoves:
            coords = " ".join(f"{r}:{k}" for r, k in a.coords.items())
            print(f"[{','.join(map(str, a.window))}] core={a.core()} {coords}")
    return 0


def cmd_shi_coords(args) -> int:
    cfg = _shi_config(args)
    alcove = DominantAlcove(tuple(_parse_ints(args.window)), cfg)
    descents = sorted(right_descents(alcove.window, cfg))
    if args.format == "json":
        record = alcove.to_json()
        record["descents"] = [f"s{i}" for i in descents]
        print(json.dumps(record))
    else:
        print("coords " + " ".join(f"{r}:{k}" for r, k in alcove.coords.items()))
        print("descents {" + ",".join(f"s{i}" for i in descents) + "}")
    return 0


def cmd_verify(args) -> int:
    claims = list(CLAIMS) if args.claim == "all" else [args.claim]
    grid = Grid(max_ab=args.max_ab, max_n=args.max_n, max_rank=args.max_rank, max_m=args.max_m)
    reports = run_claims(claims, grid, jobs=args.jobs)
    for r in reports:
        print(r.summary())
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump([r.to_json(timing=not args.no_timing) for r in reports], fh, indent=2)
            fh.write("\n")
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simcores", description="Simultaneous core partitions and the m-Shi arrangement.")
    sub = parser.add_subparsers(dest="command", required=True)

    cores = sub.add_parser("cores", help="enumerate, count or reduce cores")
    csub = cores.add_subparsers(dest="action", required=True)

    def family_args(p):
        p.add_argument("--a", type=int, required=True)
        p.add_argument("--b", type=int, required=True)
        p.add_argument("--self-conjugate", action="store_true")

    p = csub.add_parser("list", help="list the (a,b)-cores")
    family_args(p)
    p.add_argument("--stats", action="store_true", help="add size, length, skew length and maj columns")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_cores_list)

    p = csub.add_parser("count", help="enumerated count next to the closed formula")
    family_args(p)
    p.set_defaults(func=cmd_cores_count)

    p = csub.add_parser("reduce", help="a-core of a partition")
    p.add_argument("--partition", required=True)
    p.add_argument("--a", type=int, required=True)
    p.set_defaults(func=cmd_cores_reduce)

    p = sub.add_parser("qcat", help="rational q-Catalan polynomial")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--eval", type=int, help="evaluate at q = EVAL")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_qcat)

    p = sub.add_parser("stats", help="statistics of one (a,b)-core")
    p.add_argument("--partition", required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_stats)

    shi = sub.add_parser("shi", help="dominant alcoves of the m-Shi arrangement")
    ssub = shi.add_subparsers(dest="action", required=True)

    def shi_args(p):
        p.add_argument("--family", choices=["A", "C"], required=True)
        p.add_argument("--rank", type=int, required=True, help="n: window length n (type A) or 2n (type C)")
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = ssub.add_parser("alcoves", help="m-minimal or m-bounded dominant alcoves")
    shi_args(p)
    p.add_argument("--m", type=int, required=True)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--minimal", action="store_true", help="default")
    kind.add_argument("--bounded", action="store_true")
    p.set_defaults(func=cmd_shi_alcoves)

    p = ssub.add_parser("coords", help="Shi coordinates and right descents of a dominant window")
    shi_args(p)
    p.add_argument("--window", required=True)
    p.set_defaults(func=cmd_shi_coords)

    p = sub.add_parser("verify", help="check the claims over a parameter grid")
    p.add_argument("claim", choices=["all", *CLAIMS])
    p.add_argument("--max-ab", type=int, default=10)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-rank", type=int, default=3)
    p.add_argument("--max-m", type=int, default=2)
    p.add_argument("--report", metavar="FILE", help="write the JSON report here")
    p.add_argument("--no-timing", action="store_true", help="leave elapsed_ms out of the report")
    p.add_argument("--jobs", type=int, default=1, help="run claims in this many processes")
    p.set_defaults(func=cmd_verify)
    return parser


def _glue_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--window -4,-2`` into ``--window=-4,-2`` so argparse does not read it as a flag."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_values(sys.argv[1:] if argv is None else argv))
    try:
        return args.func(args)
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except InvariantError as e:
        print(f"invariant failure: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
