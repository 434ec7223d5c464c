#!/usr/bin/env python3
"""Exhaustive shift-sweep reports for the canonical instances.

Prints, for each (graph, r), one row per shift t: whether the sheared image
is circulant, its connection set, and how it relates to the source graph.
These tables are the ground truth the type-2 search is validated against.

Usage:
    python scripts/shift_sweeps.py [--large]    # --large adds the order-1715 sweep
"""

from __future__ import annotations

import argparse
import sys
import time

from circiso.circulant import make_graph
from circiso.oracle import exhaustive_type2_sweep

CASES = [
    (16, (1, 2, 7), 2),
    (16, (1, 7), 2),  # no even jump: every circulant image is Adam's
    (27, (1, 3, 8, 10), 3),
    (81, (3, 7, 20, 34), 3),
]

LARGE_CASE = (1715, (7, 17, 228, 262, 473, 507, 718, 752), 7)


def describe(row) -> str:
    if not row.circulant:
        return "not circulant"
    if row.identical:
        return "identical to source"
    if row.adams_multiplier is not None:
        return f"adams a={row.adams_multiplier}"
    return "type-2 partner"


def run_case(n, jumps, r, summarize_only=False) -> None:
    g = make_graph(n, jumps)
    t0 = time.perf_counter()
    report = exhaustive_type2_sweep(g, r)
    elapsed = time.perf_counter() - t0
    print(f"\n{g} w.r.t. r={r}  ({len(report.rows)} shifts, {elapsed:.2f}s)")
    if summarize_only:
        print(f"  circulant shifts: {report.circulant_shifts()}")
        print(f"  type-2 shifts:    {report.type2_shifts()}")
        return
    for row in report.rows:
        image = ",".join(map(str, row.image_jumps)) if row.image_jumps else "-"
        print(f"  t={row.t:>3}  image=({image})  {describe(row)}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--large", action="store_true", help="include the order-1715 sweep")
    args = parser.parse_args()
    for n, jumps, r in CASES:
        run_case(n, jumps, r)
    if args.large:
        run_case(*LARGE_CASE, summarize_only=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
