#!/usr/bin/env python3
"""Run the full verification battery and print one line per criterion.

Usage: scripts/run_acceptance.py [--seed N] [--scale X]
"""

import argparse
import sys

from urysohn import verify


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    parser.add_argument("--scale", type=float, default=1.0)
    args = parser.parse_args()
    results = verify.run_all(seed=args.seed, scale=args.scale)
    for res in results:
        print(res.line())
    return 0 if all(r.ok for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
