"""Sweep a degree range and tabulate quotient data for one rank.

Example:
    python3 scripts/degree_scan.py --q 4 --start 0 --stop 24 --coinvariants

Columns: degree, mu, cohit dimension, weight-table breakdown, and (on
request) the invariant/coinvariant dimensions.  Degrees where mu exceeds
the rank are marked as vanishing without running the elimination.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from cohitlab.cohit import EngineConfig, ResourceLimit, cohit_dim, weight_table
from cohitlab.glaction import coinvariants, invariants
from cohitlab.polyspace import mu


def scan_row(q: int, n: int, config: EngineConfig, with_groups: bool) -> dict:
    row: dict = {"n": n, "mu": mu(n)}
    if mu(n) > q:
        row.update(dim=0, weights={}, note="mu > q")
        if with_groups:
            row.update(invariants=0, coinvariants=0)
        return row
    row["dim"] = cohit_dim(q, n, config)
    row["weights"] = {
        "(" + ",".join(map(str, w)) + ")": d
        for w, d in sorted(weight_table(q, n, config).items())
        if d
    }
    if with_groups:
        row["invariants"] = invariants(q, n, "gl", config=config).dim
        row["coinvariants"] = coinvariants(q, n, "gl", config).dim
    return row


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--q", type=int, default=4, help="number of variables")
    parser.add_argument("--start", type=int, default=0)
    parser.add_argument("--stop", type=int, default=20, help="inclusive")
    parser.add_argument("--coinvariants", action="store_true",
                        help="also compute invariant/coinvariant dimensions")
    parser.add_argument("--json", action="store_true",
                        help="emit one JSON object per degree")
    parser.add_argument("--max-cols", type=int, default=1 << 21)
    args = parser.parse_args(argv)

    config = EngineConfig(max_columns=args.max_cols)
    t0 = time.time()
    for n in range(args.start, args.stop + 1):
        try:
            row = scan_row(args.q, n, config, args.coinvariants)
        except ResourceLimit as exc:
            print(f"n={n}: stopped ({exc})", file=sys.stderr)
            return 3
        if args.json:
            print(json.dumps(row, sort_keys=True))
            continue
        weights = " ".join(f"{k}:{v}" for k, v in row["weights"].items())
        extra = ""
        if args.coinvariants:
            extra = (f"  inv={row['invariants']}"
                     f" coinv={row['coinvariants']}")
        print(f"n={n:>3}  mu={row['mu']}  dim={row['dim']:>4}{extra}  "
              f"{weights}")
    print(f"# scanned {args.stop - args.start + 1} degrees at q={args.q} "
          f"in {time.time() - t0:.1f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
