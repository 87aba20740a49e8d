"""Run every invariant suite and write JSON, markdown and timing reports.

    python scripts/run_all_suites.py --seed 42 --out results/suites.json
"""

import argparse
import sys

from soclelab.cli import main

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--out", default="results/suites.json")
    ap.add_argument("--name", default="all")
    args = ap.parse_args()
    sys.exit(main(["suite", "--name", args.name, "--seed", str(args.seed), "--out", args.out]))
