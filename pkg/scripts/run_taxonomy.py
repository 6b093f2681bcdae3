#!/usr/bin/env python3
"""Run the full law suite and summarize what came back.

Writes the JSONL report next to the summary so a run can be diffed
against a previous one (byte-identical for a fixed seed).
"""
import argparse
import sys
import time
from collections import Counter
from pathlib import Path

from gsrel import (
    CATALOG,
    VARIANTS,
    entries_to_jsonl,
    entries_to_table,
    run_theorem_suite,
    suite_failures,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--semiring", action="append", default=None,
                    help="restrict to this semiring (repeatable)")
    ap.add_argument("--variant", action="append", default=None, choices=VARIANTS)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=24)
    ap.add_argument("--monad-laws", action="store_true",
                    help="also fold in the per-variant monad law rows")
    ap.add_argument("--out", type=Path, default=Path("taxonomy_report.jsonl"))
    ap.add_argument("--table", action="store_true", help="print the full table")
    args = ap.parse_args()

    semirings = tuple(args.semiring) if args.semiring else CATALOG
    variants = tuple(args.variant) if args.variant else VARIANTS

    t0 = time.time()
    entries = run_theorem_suite(
        semirings=semirings,
        variants=variants,
        seed=args.seed,
        samples=args.samples,
        include_monad_laws=args.monad_laws,
    )
    elapsed = time.time() - t0

    args.out.write_text(entries_to_jsonl(entries))
    if args.table:
        print(entries_to_table(entries))

    by_status = Counter(e.status for e in entries)
    blocking = suite_failures(entries)
    info = [e for e in entries if e.status == "counterexample" and not e.blocking]

    print(f"{len(entries)} rows in {elapsed:.1f}s -> {args.out}")
    for status, n in sorted(by_status.items()):
        print(f"  {status}: {n}")
    if info:
        print(f"{len(info)} informational counterexamples (closure/gated):")
        for e in info:
            print(f"  {e.law} [{e.variant}, {e.semiring}]")
    if blocking:
        print(f"{len(blocking)} BLOCKING failures:")
        for e in blocking:
            print(f"  {e.law} [{e.variant}, {e.semiring}] witness={e.witness}")
        return 1
    print("no blocking failures")
    return 0


if __name__ == "__main__":
    sys.exit(main())
