"""Command-line interface: count, enumerate, verify, table, oeis."""
from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from pathlib import Path
from typing import Iterable, Optional, TextIO

from . import cache as cache_io
from .counting import BFileError, MemoTable, ReferenceTooShortError, load_bfile, row, triplicate_report
from .oracle import count_feasible, iter_feasible

DEFAULT_ORACLE_CAP = 2000
CAP_ENV = "TWOPAN_ORACLE_CAP"

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP, EXIT_BFILE = 0, 1, 2, 3, 4

log = logging.getLogger("twopan")


class Emitter:
    """Writes flat string-valued records as plain text, CSV or a JSON array."""

    def __init__(self, fmt: str, fields: list[str], out: TextIO, plain_fields: Optional[list[str]] = None):
        self.fmt = fmt
        self.fields = fields
        self.plain_fields = plain_fields or fields
        self.out = out
        self._rows: list[dict[str, str]] = []
        if fmt == "csv":
            self._csv = csv.writer(out, quoting=csv.QUOTE_NONE, lineterminator="\n")
            self._csv.writerow(fields)

    def emit(self, record: dict) -> None:
        rec = {k: str(record[k]) for k in self.fields}
        if self.fmt == "plain":
            self.out.write(" ".join(rec[k] for k in self.plain_fields) + "\n")
        elif self.fmt == "csv":
            self._csv.writerow(rec.values())
        else:
            self._rows.append(rec)

    def close(self) -> None:
        if self.fmt == "json":
            json.dump(self._rows, self.out, indent=1)
            self.out.write("\n")


def _emit_all(args, fields: list[str], records: Iterable[dict], plain_fields=None) -> None:
    em = Emitter(args.format, fields, sys.stdout, plain_fields)
    for rec in records:
        em.emit(rec)
    em.close()


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {v}")
    return v


def _pos_int(text: str) -> int:
    v = _nonneg_int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {v}")
    return v


def oracle_cap(args) -> int:
    if args.oracle_cap is not None:
        cap = args.oracle_cap
    elif os.environ.get(CAP_ENV):
        try:
            cap = int(os.environ[CAP_ENV])
        except ValueError:
            log.warning("ignoring non-integer %s=%r", CAP_ENV, os.environ[CAP_ENV])
            return DEFAULT_ORACLE_CAP
    else:
        return DEFAULT_ORACLE_CAP
    if cap != DEFAULT_ORACLE_CAP:
        log.warning("oracle cap overridden to %d (default %d); large n may run for a long time", cap, DEFAULT_ORACLE_CAP)
    return cap


def open_table(args) -> MemoTable:
    seed = cache_io.load(args.cache) if args.cache else None
    if seed is not None:
        try:
            return MemoTable(seed)
        except ValueError as exc:
            log.warning("ignoring cache %s: %s", args.cache, exc)
    return MemoTable()


def close_table(args, memo: MemoTable, loaded_frontier: int) -> None:
    if args.cache and (memo.frontier > loaded_frontier or not Path(args.cache).exists()):
        cache_io.save(args.cache, memo.values())
    if args.stats:
        print(
            f"stats: loaded_frontier={loaded_frontier} computed={memo.computed} frontier={memo.frontier}",
            file=sys.stderr,
        )


COUNT_FIELDS = ["n", "m", "span", "t"]


def _count_record(n: int, memo: MemoTable) -> dict:
    r = row(n, memo)
    return {"n": r.n, "m": r.m if r.m is not None else "-", "span": r.span_text, "t": r.count}


def cmd_count(args) -> int:
    memo = open_table(args)
    start = memo.frontier
    rec = _count_record(args.n, memo)
    _emit_all(args, COUNT_FIELDS, [rec])
    close_table(args, memo, start)
    return EXIT_OK


def cmd_table(args) -> int:
    memo = open_table(args)
    start = memo.frontier
    memo.fill(args.n_max)
    _emit_all(args, COUNT_FIELDS, (_count_record(n, memo) for n in range(1, args.n_max + 1)))
    close_table(args, memo, start)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    cap = oracle_cap(args)
    if args.n > cap:
        print(f"n = {args.n} exceeds the enumeration cap of {cap}; use `count {args.n}` instead", file=sys.stderr)
        return EXIT_CAP

    def records():
        for i, p in enumerate(iter_feasible(args.n)):
            if args.limit is not None and i >= args.limit:
                yield {"n": args.n, "partition": "..."}
                return
            yield {"n": args.n, "partition": str(p)}

    _emit_all(args, ["n", "partition"], records(), plain_fields=["partition"])
    return EXIT_OK


def cmd_verify(args, parser) -> int:
    cap = oracle_cap(args)
    if args.n_lo > args.n_hi:
        parser.error(f"inverted range: {args.n_lo} > {args.n_hi}")
    if args.n_hi > cap:
        parser.error(f"n_hi = {args.n_hi} exceeds the oracle cap of {cap}")
    memo = open_table(args)
    start = memo.frontier
    memo.fill(args.n_hi)
    first_bad: Optional[tuple[int, int, int]] = None
    em = Emitter(args.format, ["n", "recursion", "oracle", "match"], sys.stdout)
    for n in range(args.n_lo, args.n_hi + 1):
        rec, ora = memo[n], count_feasible(n)
        ok = rec == ora
        if not ok and first_bad is None:
            first_bad = (n, rec, ora)
        em.emit({"n": n, "recursion": rec, "oracle": ora, "match": "ok" if ok else "mismatch"})
    em.close()
    close_table(args, memo, start)
    if first_bad:
        n, rec, ora = first_bad
        print(f"first mismatch at n = {n}: recursion {rec}, oracle {ora}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_oeis(args, parser) -> int:
    if args.m < 3:
        parser.error(f"m must be >= 3, got {args.m}")
    try:
        ref = load_bfile(args.bfile)
    except (OSError, UnicodeDecodeError, BFileError) as exc:
        print(f"cannot read b-file: {exc}", file=sys.stderr)
        return EXIT_BFILE
    memo = open_table(args)
    start = memo.frontier
    try:
        report = triplicate_report(args.m, ref, memo)
    except ReferenceTooShortError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BFILE
    fields = ["n", "t", "group", "complete", "consistent", "oeis_index", "oeis_value"]

    def records():
        for g in report.groups:
            for n, c in zip(g.ns, g.counts):
                yield {
                    "n": n,
                    "t": c,
                    "group": g.index,
                    "complete": int(g.complete),
                    "consistent": int(g.consistent),
                    "oeis_index": "-" if report.offset is None else report.offset + g.index,
                    "oeis_value": "-" if g.reference is None else g.reference,
                }

    _emit_all(args, fields, records())
    close_table(args, memo, start)
    if report.offset is None:
        print("no alignment offset matches every complete group", file=sys.stderr)
        return EXIT_MISMATCH
    print(f"alignment: group g <-> reference index g + {report.offset}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twopan", description=__doc__)
    p.add_argument("--format", choices=["plain", "csv", "json"], default="plain")
    p.add_argument("--cache", type=Path, help="t-table cache file (read and updated)")
    p.add_argument("--stats", action="store_true", help="report cache/recomputation counts on stderr")
    p.add_argument("--oracle-cap", type=_pos_int, help=f"brute-force cap (default {DEFAULT_ORACLE_CAP}; env {CAP_ENV})")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("count", help="t(n) with its part count and span")
    s.add_argument("n", type=_nonneg_int)

    s = sub.add_parser("enumerate", help="list every feasible partition of n")
    s.add_argument("n", type=_pos_int)
    s.add_argument("--limit", type=_nonneg_int)

    s = sub.add_parser("verify", help="compare the recursion with brute force over a range")
    s.add_argument("n_lo", type=_pos_int)
    s.add_argument("n_hi", type=_pos_int)

    s = sub.add_parser("table", help="t(n) for n = 1..n_max")
    s.add_argument("n_max", type=_pos_int)

    s = sub.add_parser("oeis", help="span-B triplicates against an A005704 b-file")
    s.add_argument("m", type=int)
    s.add_argument("--bfile", type=Path, help="b-file path (default: bundled A005704)")
    return p


def main(argv: Optional[list[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cmd == "count":
        return cmd_count(args)
    if args.cmd == "table":
        return cmd_table(args)
    if args.cmd == "enumerate":
        return cmd_enumerate(args)
    if args.cmd == "verify":
        return cmd_verify(args, parser)
    return cmd_oeis(args, parser)


if __name__ == "__main__":
    sys.exit(main())
