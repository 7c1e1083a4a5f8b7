"""Command line interface: check, witness, search, enumerate, decompose.

Exit codes: 0 pass, 1 input error, 2 property violation, 3 not applicable.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .algebra import CayleyTable, members
from .delta import min_cov_over_cells
from .enumeration import enumerate_semigroups
from .harness import CampaignConfig, default_jobs, run_search
from .partitions import enumerate_partitions
from .structure import StructureError, decompose_right_group, minimal_right_ideal
from .tableio import (
    NotASemigroupError,
    TableFormatError,
    format_table,
    parse_partition_code,
    read_table,
    write_table,
)
from .theorems import (
    SoundnessError,
    witness_theorem1,
    witness_theorem2,
    witness_theorem3_partition,
)

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION, EXIT_NOT_APPLICABLE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _fmt(mask: int) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


def _load(path) -> CayleyTable:
    try:
        return read_table(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except (TableFormatError, NotASemigroupError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _partition(code: str, table: CayleyTable):
    try:
        return parse_partition_code(code, table.order)
    except (TableFormatError, ValueError) as exc:
        raise InputError(f"partition: {exc}") from None


def cmd_check(args) -> int:
    table = _load(args.table)
    if args.partition is not None:
        partitions = [_partition(args.partition, table)]
    else:
        partitions = list(enumerate_partitions(table.order, "all"))
    cache: dict = {}
    failed = 0
    for p in partitions:
        rep = min_cov_over_cells(p, table, cache)
        code = " ".join(map(str, p.code()))
        print(f"partition {code} (n = {p.n})")
        for i, (cell, d, res) in enumerate(zip(rep.cells, rep.deltas, rep.covs)):
            value = res.value if res.defined else "undefined"
            print(f"  cell {i} {_fmt(cell)}: delta {_fmt(d)}, cov {value}")
        if rep.passes:
            print(f"  best cell {rep.best_cell}, cov {rep.best_value} <= n = {p.n}: PASS")
        else:
            failed += 1
            print(f"  best cov {rep.best_value} > n = {p.n}: FAIL")
    if len(partitions) > 1:
        print(f"{len(partitions) - failed}/{len(partitions)} partitions pass")
    return EXIT_VIOLATION if failed else EXIT_OK


def cmd_witness(args) -> int:
    table = _load(args.table)
    partition = _partition(args.partition, table)
    out = {"theorem": args.theorem, "partition": list(partition.code()), "n": partition.n}
    if args.theorem == 1:
        trace = witness_theorem1(partition, table)
        out["certificate"] = trace.certificate.to_dict()
        out["trace"] = [s.to_dict() for s in trace.steps]
    elif args.theorem == 2:
        out["certificate"] = witness_theorem2(partition, table).to_dict()
    else:
        cert = witness_theorem3_partition(partition, table)
        if cert is None:
            print("theorem 3 not applicable: no cell contains a left or right zero", file=sys.stderr)
            return EXIT_NOT_APPLICABLE
        out["certificate"] = cert.to_dict()
    out["verified"] = True
    print(json.dumps(out, indent=2))
    return EXIT_OK


def _parse_orders(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise InputError(f"bad order range {text!r}, expected A..B") from None


def _parse_partition_mode(text: str):
    if text == "all":
        return "all"
    if text.isdigit():
        return int(text)
    codes = [tuple(int(v) for v in chunk.replace(",", " ").split()) for chunk in text.split(";")]
    return [c for c in codes if c]


def cmd_search(args) -> int:
    theorems = frozenset(t.strip() for t in args.theorems.split(","))
    try:
        config = CampaignConfig(
            orders=_parse_orders(args.orders),
            partitions=_parse_partition_mode(args.partitions),
            theorems=theorems,
            jobs=args.jobs,
            out=Path(args.out),
            checkpoint=Path(args.checkpoint) if args.checkpoint else None,
            checkpoint_interval=args.checkpoint_interval,
            anti_iso=args.anti_iso,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    summary = run_search(config, resume=not args.fresh)
    data = summary.to_dict()
    text = json.dumps(data, indent=2)
    Path(str(args.out) + ".summary.json").write_text(text + "\n")
    print(text)
    return EXIT_OK if summary.ok else EXIT_VIOLATION


def cmd_enumerate(args) -> int:
    count = 0
    if args.dump:
        Path(args.dump).mkdir(parents=True, exist_ok=True)
    for table in enumerate_semigroups(args.order, up_to_iso=not args.labeled,
                                      include_anti_iso_dedup=args.anti_iso):
        count += 1
        print(" ".join(map(str, table.products)))
        if args.dump:
            write_table(Path(args.dump) / f"order{args.order}_{count:06d}.txt", table,
                        f"semigroup {count} of order {args.order}")
    print(f"# {count} semigroups of order {args.order}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    table = _load(args.table)
    R = minimal_right_ideal(table)
    dec = decompose_right_group(R, table)
    H = members(dec.H)
    print(f"minimal right ideal R = {_fmt(dec.R)}")
    print(f"r = {dec.r}")
    print(f"idempotents of R: E = {_fmt(dec.E)}")
    print(f"a = {dec.a}")
    print(f"H = Ra = {_fmt(dec.H)}, identity {dec.identity}, order {len(H)}")
    print("inverses in H: " + ", ".join(f"{x}->{dec.inverse[x]}" for x in H))
    local = {x: i for i, x in enumerate(H)}
    sub = CayleyTable([[local[table.rows[x][y]] for y in H] for x in H])
    print(f"H multiplication table (elements {H} renumbered 0..{len(H) - 1}):")
    print(format_table(sub), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semicover", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="per-cell delta sets and exact covering numbers")
    p.add_argument("table")
    p.add_argument("--partition", help="block labels, e.g. '0 1 0 1'; all partitions if omitted")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("witness", help="constructive certificate from one of the theorems")
    p.add_argument("table")
    p.add_argument("--partition", required=True)
    p.add_argument("--theorem", type=int, choices=(1, 2, 3), required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("search", help="exhaustive campaign over small semigroups")
    p.add_argument("--orders", required=True, help="A..B")
    p.add_argument("--partitions", default="all", help="all | N | 'code;code;...'")
    p.add_argument("--theorems", default="1,2,3,exact")
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.add_argument("--out", required=True)
    p.add_argument("--checkpoint")
    p.add_argument("--checkpoint-interval", type=int, default=16)
    p.add_argument("--anti-iso", action="store_true",
                   help="enumerate up to anti-isomorphism, then evaluate transposes too")
    p.add_argument("--fresh", action="store_true", help="ignore an existing checkpoint")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("enumerate", help="semigroups of a given order up to isomorphism")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--dump", help="directory for one table file per semigroup")
    p.add_argument("--anti-iso", action="store_true")
    p.add_argument("--labeled", action="store_true", help="all labeled tables, no dedup")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("decompose", help="minimal right ideal and its group part")
    p.add_argument("table")
    p.set_defaults(func=cmd_decompose)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SoundnessError, StructureError) as exc:
        print(f"VIOLATION: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
