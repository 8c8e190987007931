#!/usr/bin/env python3
"""Run the randomised decomposability search and print the report as JSON.

Example:
    python scripts/run_conjecture.py --n1 3 --n2 2 --samples 200 --seed 11

Any indecomposable hit would be a verified counterexample to the expectation
that every algebra in this region splits; its full structure data is included
in the report for independent rechecking.
"""

import argparse
import json
import sys
import time

from nildecomp.centroid import conjecture_search
from nildecomp.serialize import search_report_to_json


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n1", type=int, required=True, help="left part dimension")
    parser.add_argument("--n2", type=int, required=True, help="radical dimension (< n1)")
    parser.add_argument("--samples", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    start = time.monotonic()
    report = conjecture_search(args.n1, args.n2, args.samples, args.seed)
    doc = search_report_to_json(report)
    doc["elapsed_seconds"] = round(time.monotonic() - start, 2)
    print(json.dumps(doc, sort_keys=True, indent=2))
    if report.indecomposable:
        print(
            f"found {report.indecomposable} indecomposable instance(s) - "
            "inspect counterexample_candidates",
            file=sys.stderr,
        )
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
