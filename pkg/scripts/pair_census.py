#!/usr/bin/env python3
"""Verdict-by-adjacency census over every 0-before-1 pair of every polygon.

The interesting column is generic verdicts from non-adjacent pairs: they
appear exactly when the polygon repeats a segment, because swapping two equal
segments is a symmetry of the whole cascade that changes the segment numbers
of a pair without changing its verdict.

Example:
    python scripts/pair_census.py --height 8 --witnesses 5
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from dataclasses import dataclass

from stratabound.modification import GENERIC, modification_census
from stratabound.newton import parse_polygon


@dataclass(frozen=True)
class Config:
    height: int
    witnesses: int


def parse_args(argv=None) -> Config:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--height", type=int, default=8, help="maximum total height")
    parser.add_argument(
        "--witnesses",
        type=int,
        default=3,
        help="how many generic non-adjacent witnesses to print",
    )
    args = parser.parse_args(argv)
    return Config(height=args.height, witnesses=args.witnesses)


def renaming_adjacent(polygon_text: str, r: int, q: int) -> bool:
    """Can equal segments be renamed so the pair becomes adjacent (q = r+1)?"""
    if r == q:
        return False
    segs = [(s.m, s.n) for s in parse_polygon(polygon_text).segments]
    block = {}
    i = 0
    while i < len(segs):
        j = i
        while j + 1 < len(segs) and segs[j + 1] == segs[i]:
            j += 1
        for k in range(i, j + 1):
            block[k + 1] = (i + 1, j + 1)
        i = j + 1
    r_lo, r_hi = block[r]
    q_lo, q_hi = block[q]
    return max(r_lo + 1, q_lo) <= min(r_hi + 1, q_hi)


def main(argv=None) -> int:
    cfg = parse_args(argv)
    rows = modification_census(cfg.height)
    table = Counter()
    witnesses = []
    for row in rows:
        if row.adjacent:
            column = "adjacent"
        elif renaming_adjacent(row.polygon, row.zero_segment, row.one_segment):
            column = "renameable"
        else:
            column = "distant"
        table[(row.verdict, column)] += 1
        if row.verdict == GENERIC and column != "adjacent":
            witnesses.append(row)

    verdicts = sorted({v for v, _ in table})
    columns = ["adjacent", "renameable", "distant"]
    width = max(len(v) for v in verdicts) + 2
    print(f"{'verdict':{width}s}" + "".join(f"{c:>12s}" for c in columns) + f"{'total':>10s}")
    for verdict in verdicts:
        counts = [table[(verdict, c)] for c in columns]
        print(f"{verdict:{width}s}" + "".join(f"{n:12d}" for n in counts) + f"{sum(counts):10d}")
    print(f"\ntraces: {len(rows)}")

    generic_nonadjacent = [w for w in witnesses]
    print(f"generic verdicts from non-adjacent pairs: {len(generic_nonadjacent)}")
    for row in generic_nonadjacent[: cfg.witnesses]:
        print(f"  {row.polygon}  pair {row.pair}")
    distant_generic = [
        w
        for w in witnesses
        if not renaming_adjacent(w.polygon, w.zero_segment, w.one_segment)
    ]
    print(f"generic verdicts beyond renaming-adjacency: {len(distant_generic)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
