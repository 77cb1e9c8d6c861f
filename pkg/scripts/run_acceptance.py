"""Run the acceptance matrix and write a JSON summary.

    python scripts/run_acceptance.py [--only NAME ...] [--jobs K] [--out results/acceptance.json]
"""

import argparse
import json
import os
import sys

from specht import acceptance


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--only", nargs="*", choices=list(acceptance.CRITERIA))
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--out")
    args = ap.parse_args()

    results = acceptance.run(args.only, jobs=args.jobs)
    for res in results:
        print(res.line())
        for note in res.notes:
            print(f"    {note}")
    ok = all(r.ok for r in results)
    print("ALL PASS" if ok else "FAILURES PRESENT")
    if args.out:
        os.makedirs(os.path.dirname(args.out) or ".", exist_ok=True)
        with open(args.out, "w") as fh:
            json.dump({"criteria": [r.to_json() for r in results], "pass": ok}, fh, indent=2)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
