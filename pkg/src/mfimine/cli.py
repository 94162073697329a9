"""Command line front end: mine, verify, bench.

Exit codes: 0 on success, 2 for a missing input file or bad
flags/input, 3 when verify refuses a database too large for the
exhaustive oracle, 1 for a divergence or violated run invariant.
"""

from __future__ import annotations

import argparse
import csv
import math
import os
import sys

from .dataset import FimiParseError, build_vertical, parse_fimi, resolve_minsup
from .miner import ENGINES, MinerConfig, RunStats, mine
from .oracle import OracleGuardError, oracle_mfi

EXIT_OK = 0
EXIT_DIVERGED = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


def _parse_minsup_token(tok: str):
    """Absolute when it looks like an int, relative when it has a dot."""
    try:
        if "." in tok or "e" in tok.lower():
            return float(tok)
        return int(tok, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"invalid minsup {tok!r}: expected an integer count or a "
            f"fraction in (0, 1]"
        ) from None


def _parse_minsup_list(tok: str):
    return [_parse_minsup_token(t) for t in tok.split(",") if t]


def _parse_engines(tok: str):
    engines = [t for t in tok.split(",") if t]
    for e in engines:
        if e not in ENGINES:
            raise argparse.ArgumentTypeError(
                f"unknown engine {e!r}; expected one of {ENGINES}"
            )
    return engines


def _load(path: str):
    try:
        with open(path, "r", encoding="ascii") as fh:
            return parse_fimi(fh)
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except FimiParseError as exc:
        raise _UsageError(f"{path}: {exc}") from exc


class _UsageError(Exception):
    pass


def _pattern_lines(store, ext_of_int):
    for pat, sup in zip(store.patterns, store.supports):
        ids = sorted(ext_of_int[i] for i in pat)
        yield " ".join(str(i) for i in ids) + f" ({sup})"


def _write_lines(lines, path):
    if path is None:
        for line in lines:
            print(line)
    else:
        with open(path, "w", encoding="ascii") as fh:
            for line in lines:
                fh.write(line + "\n")


def _add_common(p):
    p.add_argument("input", help="FIMI transaction file")
    p.add_argument("--width", type=int, default=64, choices=(32, 64),
                   help="patterns per index word (default 64)")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="mfimine",
        description="Maximal frequent itemset mining",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_mine = sub.add_parser("mine", help="mine maximal frequent itemsets")
    _add_common(p_mine)
    p_mine.add_argument("--minsup", required=True, type=_parse_minsup_token,
                        help="absolute count, or relative fraction with a "
                             "decimal point")
    p_mine.add_argument("--engine", default="fastlmfi", choices=ENGINES)
    p_mine.add_argument("--no-pep", dest="pep", action="store_false")
    p_mine.add_argument("--no-fhut", dest="fhut", action="store_false")
    p_mine.add_argument("--no-hutmfi", dest="hutmfi", action="store_false")
    p_mine.add_argument("--no-reorder", dest="reorder", action="store_false")
    p_mine.add_argument("--out", help="output file (default stdout)")
    p_mine.add_argument("--stats", help="write run stats as key=value lines")

    p_verify = sub.add_parser(
        "verify", help="cross-check all engines against the exhaustive oracle")
    _add_common(p_verify)
    p_verify.add_argument("--minsup", required=True, type=_parse_minsup_token)

    p_bench = sub.add_parser(
        "bench", help="benchmark the engines, CSV output")
    _add_common(p_bench)
    p_bench.add_argument("--minsup", required=True, type=_parse_minsup_list,
                         help="comma-separated thresholds")
    p_bench.add_argument("--engines", type=_parse_engines,
                         default=list(ENGINES),
                         help="comma-separated engine names (default all)")
    p_bench.add_argument("--reps", type=int, default=1)
    p_bench.add_argument("--out", help="CSV file (default stdout)")
    return parser


def cmd_mine(args) -> int:
    db = _load(args.input)
    sigma = resolve_minsup(args.minsup, db.n_transactions)
    cfg = MinerConfig(minsup=sigma, engine=args.engine, pep=args.pep,
                      fhut=args.fhut, hutmfi=args.hutmfi,
                      reorder=args.reorder, word_width=args.width)
    vdb = build_vertical(db, sigma, width=args.width)
    stats = RunStats()
    store = mine(vdb, cfg, stats=stats)
    _write_lines(_pattern_lines(store, vdb.ext_of_int), args.out)
    if args.stats:
        with open(args.stats, "w", encoding="ascii") as fh:
            fh.write(f"dataset={os.path.basename(args.input)}\n")
            fh.write(f"minsup={sigma}\n")
            fh.write(f"engine={args.engine}\n")
            for key, val in stats.as_dict().items():
                fh.write(f"{key}={val}\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    db = _load(args.input)
    sigma = resolve_minsup(args.minsup, db.n_transactions)
    try:
        expected = oracle_mfi(db, sigma).maximal
    except OracleGuardError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_GUARD
    expected_ext = {tuple(sorted(x)) for x in expected}
    results = {}
    vdb = build_vertical(db, sigma, width=args.width)
    for engine in ENGINES:
        cfg = MinerConfig(minsup=sigma, engine=engine, word_width=args.width)
        store = mine(vdb, cfg)
        ext = vdb.ext_of_int
        results[engine] = {
            tuple(sorted(ext[i] for i in pat)) for pat in store.patterns
        }
    for engine in ENGINES:
        got = results[engine]
        if got != expected_ext:
            missing = sorted(expected_ext - got)
            extra = sorted(got - expected_ext)
            first = (missing or extra)[0]
            kind = "missing" if missing else "spurious"
            print(
                f"verify: engine {engine} diverges from the oracle at "
                f"minsup={sigma}: {kind} {' '.join(map(str, first))}",
                file=sys.stderr,
            )
            return EXIT_DIVERGED
    print(
        f"verify: ok, {len(expected_ext)} maximal itemsets at "
        f"minsup={sigma}, all engines agree with the oracle"
    )
    return EXIT_OK


BENCH_COLUMNS = ("dataset", "minsup", "engine", "total_ms", "superset_ms",
                 "n_mfi", "n_word_ands", "peak_lind_entries")


def cmd_bench(args) -> int:
    db = _load(args.input)
    name = os.path.basename(args.input)
    rows = []
    for raw in args.minsup:
        sigma = resolve_minsup(raw, db.n_transactions)
        vdb = build_vertical(db, sigma, width=args.width)
        n_mfi_seen = None
        for engine in args.engines:
            cfg = MinerConfig(minsup=sigma, engine=engine,
                              word_width=args.width)
            for _ in range(args.reps):
                stats = RunStats()
                store = mine(vdb, cfg, stats=stats)
                if engine == "fastlmfi":
                    bound = math.ceil(store.n_patterns / args.width)
                    if stats.peak_lind_entries > bound:
                        print(
                            f"bench: index-size bound violated: peak "
                            f"{stats.peak_lind_entries} entries > "
                            f"ceil({store.n_patterns}/{args.width})",
                            file=sys.stderr,
                        )
                        return EXIT_DIVERGED
                if n_mfi_seen is None:
                    n_mfi_seen = store.n_patterns
                elif n_mfi_seen != store.n_patterns:
                    print(
                        f"bench: engine disagreement at minsup={sigma}: "
                        f"{n_mfi_seen} vs {store.n_patterns} patterns",
                        file=sys.stderr,
                    )
                    return EXIT_DIVERGED
                rows.append({
                    "dataset": name,
                    "minsup": raw,
                    "engine": engine,
                    "total_ms": f"{stats.total_ms:.3f}",
                    "superset_ms": f"{stats.superset_ms:.3f}",
                    "n_mfi": stats.n_mfi,
                    "n_word_ands": stats.n_word_ands,
                    "peak_lind_entries": stats.peak_lind_entries,
                })
    out = sys.stdout if args.out is None else open(
        args.out, "w", encoding="ascii", newline="")
    try:
        writer = csv.DictWriter(out, fieldnames=BENCH_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "mine":
            return cmd_mine(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_bench(args)
    except _UsageError as exc:
        print(f"mfimine: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"mfimine: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
