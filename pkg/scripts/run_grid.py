#!/usr/bin/env python3
"""Run every claim over the standard grid of spaces and write JSON lines.

    python scripts/run_grid.py --out grid.jsonl --jobs 4

Exit status is 0 when every report is verified.
"""

import argparse
import sys
from collections import Counter

from rtdg.config import DEFAULT_SEED, Limits
from rtdg.spaces import SpaceSpec
from rtdg.verification import CLAIMS, run_suite

GRID = (
    [SpaceSpec.zq(q, n) for q in (2, 3) for n in range(1, 6)]
    + [SpaceSpec.sn(n) for n in range(2, 6)]
    + [SpaceSpec.product(s) for s in ((2, 3), (3, 2), (2, 3, 2), (2, 2, 3, 2))]
)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", help="JSON-lines file (default stdout)")
    p.add_argument("--claims", default=",".join(CLAIMS))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--timings", action="store_true")
    args = p.parse_args(argv)

    claims = args.claims.split(",")
    limits = Limits.from_env()
    out = open(args.out, "w") if args.out else sys.stdout
    statuses = Counter()
    try:
        for space in GRID:
            reports = run_suite(space, claims, limits=limits, seed=args.seed, jobs=args.jobs,
                                sample_budget=args.samples)
            for r in reports:
                out.write(r.to_json(timings=args.timings) + "\n")
                statuses[r.status] += 1
            print(f"{space}: {len(reports)} reports", file=sys.stderr)
    finally:
        if args.out:
            out.close()
    print(" ".join(f"{k}={v}" for k, v in sorted(statuses.items())), file=sys.stderr)
    return 0 if set(statuses) <= {"verified"} else 1


if __name__ == "__main__":
    sys.exit(main())
