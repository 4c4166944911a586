"""Command-line interface.

Exit codes: 0 success (``verify``: all valid, ``feas``: infeasible),
1 some record invalid, 2 ``feas`` verdict open, 3 usage or input error.
Results go to stdout or ``--out``; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import __version__
from .blockcirc import BlockCirculantColoring, canonicalize_block
from .circulant import CirculantColoring, unit_canonical_form
from .errors import RamseyError
from .extend import extend_by_one, local_search
from .feasibility import builtin_tables, feasibility_verdict, parse_tables
from .formats import (emit_record, encode_graph6, format_census, parse_pattern_list,
                      parse_records, realize_record)
from .search import DEFAULT_SPLIT_DEPTH, SearchJob, enumerate_colorings
from .verify import dedupe_indices, enumerate_all_small, verify_ramsey

EXIT_INVALID = 1
EXIT_OPEN = 2
EXIT_ERROR = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _log(msg):
    print(msg, file=sys.stderr)


def _read_records(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="ascii") as fh:
            text = fh.read()
    return list(parse_records(text))


class _Output:
    def __init__(self, path):
        self.path = path
        self.fh = None

    def __enter__(self):
        self.fh = sys.stdout if self.path in (None, "-") else open(self.path, "w", encoding="ascii")
        return self.fh

    def __exit__(self, *exc):
        if self.fh is not sys.stdout:
            self.fh.close()
        else:
            self.fh.flush()


def cmd_gen(args):
    patterns = parse_pattern_list(args.avoid)
    if len(patterns) != args.colors:
        raise RamseyError(f"--avoid names {len(patterns)} patterns for {args.colors} colours")
    k = 1 if args.mode == "circ" else args.blocks
    if args.mode == "block" and (k is None or k < 2):
        raise RamseyError("--mode block needs --blocks K with K >= 2")
    if args.format == "g6" and args.colors != 2:
        raise RamseyError("graph6 output needs exactly two colours")
    job = SearchJob(args.n, patterns, k=k, split_modulus=args.split, split_residue=args.part,
                    split_depth=args.split_depth, progress=args.verbose)
    start = time.perf_counter()
    count = 0
    with _Output(args.out) as out:
        for col in enumerate_colorings(job):
            out.write((encode_graph6(realize_record(col)) if args.format == "g6"
                       else emit_record(col)) + "\n")
            count += 1
    _log(f"gen: {count} colorings, {job.stats.get('nodes', 0)} nodes, "
         f"{time.perf_counter() - start:.2f}s")
    return 0


def cmd_verify(args):
    patterns = parse_pattern_list(args.avoid)
    records = _read_records(args.inp)
    bad = 0
    for idx, rec in enumerate(records, 1):
        g = realize_record(rec)
        if g.c != len(patterns):
            raise RamseyError(f"record {idx} has {g.c} colours but {len(patterns)} patterns were given")
        verdict = verify_ramsey(g, patterns)
        if not verdict.valid:
            bad += 1
        print(f"{idx}: {verdict.describe()}")
    _log(f"verify: {len(records)} records, {bad} invalid")
    return EXIT_INVALID if bad else 0


def cmd_canon(args):
    records = _read_records(args.inp)
    with _Output(args.out) as out:
        for idx, rec in enumerate(records, 1):
            if isinstance(rec, BlockCirculantColoring):
                rec = canonicalize_block(rec)
            elif isinstance(rec, CirculantColoring):
                rec = unit_canonical_form(rec)
            else:
                raise RamseyError(f"record {idx} is graph6; canon needs circ or blockcirc records")
            out.write(emit_record(rec) + "\n")
    return 0


def cmd_dedupe(args):
    records = _read_records(args.inp)
    keep = dedupe_indices([realize_record(r) for r in records])
    with _Output(args.out) as out:
        for idx in keep:
            out.write(emit_record(records[idx]) + "\n")
    _log(f"dedupe: {len(records)} in, {len(keep)} non-isomorphic")
    return 0


def cmd_extend(args):
    patterns = parse_pattern_list(args.avoid)
    if len(patterns) != 2:
        raise RamseyError("extend works on two-colour graphs")
    records = _read_records(args.inp)
    count = 0
    with _Output(args.out) as out:
        for rec in records:
            g = realize_record(rec)
            if args.remove:
                stream = local_search(g, patterns, args.remove, args.add or args.remove)
            else:
                stream = extend_by_one(g, patterns)
            for h in stream:
                out.write(encode_graph6(h) + "\n")
                count += 1
    _log(f"extend: {count} graphs")
    return 0


def cmd_feas(args):
    names = [str(p) for p in parse_pattern_list(args.avoid)]
    if len(names) != 2:
        raise RamseyError("feas needs exactly two patterns")
    if args.tables:
        with open(args.tables, encoding="ascii") as fh:
            e1, e2 = parse_tables(fh.read())
    else:
        e1, e2 = builtin_tables((names[0], names[1]))
    verdict = feasibility_verdict(names[0], names[1], args.n, e1, e2)
    print(verdict.report())
    return 0 if verdict.infeasible else EXIT_OPEN


def cmd_count_small(args):
    patterns = parse_pattern_list(args.avoid)
    census = enumerate_all_small(patterns, args.max_n)
    with _Output(args.out) as out:
        out.write(format_census(census))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="circramsey", description="Circulant and block-circulant Ramsey graph tools.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="enumerate circulant or block-circulant Ramsey colorings")
    g.add_argument("--mode", choices=("circ", "block"), required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--blocks", type=int)
    g.add_argument("--colors", type=int, default=2)
    g.add_argument("--avoid", required=True, help="one pattern per colour, e.g. J4,J7")
    g.add_argument("--split", type=int, default=1, help="number of parts")
    g.add_argument("--part", type=int, default=0, help="which part, 0..split-1")
    g.add_argument("--split-depth", type=int, default=DEFAULT_SPLIT_DEPTH)
    g.add_argument("--out")
    g.add_argument("--format", choices=("bc", "g6"), default="bc")
    g.add_argument("--verbose", action="store_true")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="check records independently")
    v.add_argument("--avoid", required=True)
    v.add_argument("--in", dest="inp", required=True)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("canon", help="canonical form of circ/blockcirc records")
    c.add_argument("--in", dest="inp", required=True)
    c.add_argument("--out")
    c.set_defaults(func=cmd_canon)

    d = sub.add_parser("dedupe", help="keep one record per isomorphism class")
    d.add_argument("--in", dest="inp", required=True)
    d.add_argument("--out")
    d.set_defaults(func=cmd_dedupe)

    e = sub.add_parser("extend", help="one-vertex extension or local search")
    e.add_argument("--in", dest="inp", required=True)
    e.add_argument("--avoid", required=True)
    e.add_argument("--remove", type=int, default=0)
    e.add_argument("--add", type=int, default=0)
    e.add_argument("--out")
    e.set_defaults(func=cmd_extend)

    f = sub.add_parser("feas", help="deficiency-sum feasibility verdict")
    f.add_argument("--avoid", required=True)
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--tables")
    f.set_defaults(func=cmd_feas)

    s = sub.add_parser("count-small", help="census of small Ramsey graphs")
    s.add_argument("--avoid", required=True)
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_count_small)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RamseyError, OSError) as exc:
        _log(f"error: {exc}")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
