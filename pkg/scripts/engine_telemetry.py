#!/usr/bin/env python3
"""How far do recoloring moves alone carry the extension engine?

For each 3K1-free graph on n vertices with max degree >= 8, reinsert every
vertex through the extension ladder and tally which stage succeeded, at
several search depths.  A fallback count of zero at some depth would mean
the move repertoire alone colored the whole corpus.

    python3 scripts/engine_telemetry.py --n 9 --depths 0 2 4
"""

import argparse
import sys
from collections import Counter

from colorbound.canon import corpus_3k1_free
from colorbound.kempe import SearchConfig, color_3k1_free


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=9)
    ap.add_argument("--min-delta", type=int, default=8)
    ap.add_argument("--depths", type=int, nargs="+", default=[0, 2, 4])
    args = ap.parse_args()

    graphs = list(corpus_3k1_free(args.n, args.min_delta))
    print(f"{len(graphs)} graphs with n={args.n}, delta>={args.min_delta}\n")
    print(f"{'depth':>5} {'rule':>8} {'search':>8} {'fallback':>8}")
    for depth in args.depths:
        config = SearchConfig(depth=depth)
        totals = Counter()
        for _, g in graphs:
            _, tel = color_3k1_free(g, config)
            totals["rule"] += tel.rule_count
            totals["search"] += tel.search_count
            totals["fallback"] += tel.fallback_count
        print(f"{depth:>5} {totals['rule']:>8} {totals['search']:>8} {totals['fallback']:>8}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
