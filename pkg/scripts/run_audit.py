#!/usr/bin/env python3
"""Full desk-scale audit: every catalogued property, every counterexample search.

Writes found counterexample records (and first violation records of failed
properties) to the output directory and prints one line per catalog entry.
Exits 0 only when every property held and no extra searches surprised us;
a nonzero exit of this script is informative, not an error: this library's
whole point is to report which claims survive the audit.
"""

import argparse
import sys
import time
from pathlib import Path

from fuzzygraphs import (
    CLAIMS,
    PROPERTIES,
    check_property,
    save_record,
    search_counterexample,
)
from fuzzygraphs.audit import default_profile


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=200)
    parser.add_argument("--budget", type=int, default=10_000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--grid", type=int, default=16)
    parser.add_argument("--out", default="counterexamples")
    args = parser.parse_args()

    out = Path(args.out)
    print(f"== properties (samples={args.samples}, seed={args.seed}) ==")
    violated = []
    for pid in PROPERTIES:
        profile = None if PROPERTIES[pid].kind is None else default_profile(pid, None, args.grid)
        start = time.perf_counter()
        report = check_property(pid, samples=args.samples, seed=args.seed, profile=profile)
        note = f", discarded {report.discarded}" if report.discarded else ""
        print(
            f"{pid:<16} {report.samples_run:>4} runs, {report.violations:>3} violations"
            f"{note}  ({time.perf_counter() - start:.2f}s)"
        )
        if report.violations:
            violated.append(pid)
            if report.first_violation is not None:
                save_record(report.first_violation, out)

    print(f"\n== counterexample searches (budget={args.budget}, seed={args.seed}) ==")
    found = []
    for claim in CLAIMS:
        start = time.perf_counter()
        record = search_counterexample(claim, budget=args.budget, seed=args.seed)
        if record is None:
            print(f"{claim:<34} not found  ({time.perf_counter() - start:.2f}s)")
            continue
        found.append(claim)
        path = save_record(record, out)
        print(f"{claim:<34} FOUND -> {path}  ({time.perf_counter() - start:.2f}s)")

    print(f"\n{len(violated)} of {len(PROPERTIES)} properties violated: {violated or 'none'}")
    print(f"{len(found)} of {len(CLAIMS)} searches found counterexamples")
    return 1 if violated else 0


if __name__ == "__main__":
    sys.exit(main())
