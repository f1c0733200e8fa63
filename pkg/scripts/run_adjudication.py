#!/usr/bin/env python3
"""Adjudicate the whole claim registry and write the report.

Example:
    python scripts/run_adjudication.py --seed 2024 --levels 1,2 --instances 200 \
        --budget-nodes 2000000 --out report
writes report.json and report.txt.  Without --out both renderings go to stdout.
"""

import argparse
import json
import sys

from fcnlab.cli import _render_report
from fcnlab.harness import run_all_claims
from fcnlab.solve import Budget


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, required=True)
    ap.add_argument("--instances", type=int, default=200)
    ap.add_argument("--levels", default="1,2")
    ap.add_argument("--budget-nodes", type=int, default=2_000_000)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--out", help="output path prefix")
    args = ap.parse_args()

    levels = tuple(int(x) for x in args.levels.split(","))
    report = run_all_claims(
        seed=args.seed,
        instances=args.instances,
        levels=levels,
        budget=Budget(max_nodes=args.budget_nodes),
        threads=args.threads,
    )
    text = _render_report(report)
    blob = json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"
    if args.out:
        with open(args.out + ".json", "w", encoding="utf-8") as fh:
            fh.write(blob)
        with open(args.out + ".txt", "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print(f"wrote {args.out}.json and {args.out}.txt")
    else:
        print(text)
        sys.stdout.write(blob)
    summary = report["summary"]
    if summary["refuted"]:
        return 1
    if summary["undecided"]:
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
