#!/usr/bin/env python3
"""Verify every bound over the full 3K1-free corpora for n = 1..N.

Writes one JSON-lines record file per order and prints a combined summary.

    python3 scripts/full_sweep.py --max-n 9 --outdir records/
"""

import argparse
import sys
import time
from pathlib import Path

from colorbound.canon import corpus_3k1_free
from colorbound.harness import Summary, report, verify_graph
from colorbound.kempe import SearchConfig


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--min-delta", type=int, default=0)
    ap.add_argument("--budget", type=int, default=SearchConfig().depth)
    ap.add_argument("--outdir", type=Path, default=Path("records"))
    args = ap.parse_args()

    args.outdir.mkdir(parents=True, exist_ok=True)
    config = SearchConfig(depth=args.budget)
    combined = Summary()
    all_records = []
    start = time.monotonic()
    for n in range(1, args.max_n + 1):
        path = args.outdir / f"n{n}.jsonl"
        count = 0
        with path.open("w", encoding="ascii") as fh:
            for gid, g in corpus_3k1_free(n, args.min_delta):
                rec = verify_graph(g, config, gid)
                fh.write(rec.to_json() + "\n")
                combined.add(rec)
                all_records.append(rec)
                count += 1
        print(f"n={n}: {count} graphs -> {path}")
    print(f"\nelapsed: {time.monotonic() - start:.1f}s\n")
    print(report(all_records))
    return 1 if combined.violations else 0


if __name__ == "__main__":
    sys.exit(main())
