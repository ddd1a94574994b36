#!/usr/bin/env python3
"""Collect which trees hit each bound exactly, order by order.

Runs the full census up to --max-order, then prints, for every order, how
many trees attain the lower bound, the tree upper bound, and the whisker
upper bound, together with the first few attaining codes.  The complete
lists land in the census summary JSON.

Usage:
  python scripts/tightness_census.py --max-order 12 [--out census.csv]
"""

import argparse
import json
from dataclasses import dataclass
from pathlib import Path

from treereg.census import CensusConfig, run_census


@dataclass
class SweepConfig:
    max_order: int
    out_path: Path
    preview: int = 4


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-order", type=int, default=12)
    parser.add_argument("--out", default="tightness_census.csv")
    parser.add_argument("--preview", type=int, default=4,
                        help="codes to print per bucket (default: %(default)s)")
    args = parser.parse_args()
    cfg = SweepConfig(args.max_order, Path(args.out), args.preview)

    summary = run_census(CensusConfig(cfg.max_order, cfg.out_path))
    for n_str, bucket in sorted(summary["orders"].items(), key=lambda kv: int(kv[0])):
        print(f"order {n_str}: {bucket['trees']} trees")
        for kind in ("lb_tight", "ub_tight", "wub_tight"):
            codes = bucket[kind + "_codes"]
            shown = "; ".join(codes[: cfg.preview])
            more = f" (+{len(codes) - cfg.preview} more)" if len(codes) > cfg.preview else ""
            print(f"  {kind}: {bucket[kind]}  [{shown}]{more}")
    print(f"\nrecords: {cfg.out_path}")
    print(f"full code lists: {cfg.out_path}.summary.json")
    print(json.dumps({"total": summary["total"]}))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
