"""Certify the restriction filtration over one target and tabulate layers.

    python scripts/restriction_sweep.py --field cyclo --m 4 --charge 0,0 --n 4
    python scripts/restriction_sweep.py --field fp --p 2 --xi 1 --charge 0 --n 5
"""

import argparse
import time
from fractions import Fraction

from specht.arith import CyclotomicField, PrimeField, Rationals
from specht.restriction import restriction_report
from specht.tableaux import multipartitions


def build_target(args):
    if args.field == "cyclo":
        return CyclotomicField(args.m)
    if args.field == "fp":
        return PrimeField(args.p, int(args.xi))
    return Rationals(Fraction(args.xi))


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--field", choices=("q", "fp", "cyclo"), default="q")
    ap.add_argument("--xi", default="1")
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--m", type=int, default=4)
    ap.add_argument("--charge", default="0")
    ap.add_argument("--n", type=int, default=4)
    args = ap.parse_args()

    target = build_target(args)
    charge = tuple(int(x) for x in args.charge.split(","))
    failures = 0
    for n in range(1, args.n + 1):
        start = time.perf_counter()
        for lam in multipartitions(n, len(charge)):
            rep = restriction_report(lam, charge, target)
            layers = " ".join(f"{l.mu.render()}:{l.dim}" for l in rep.layers)
            flag = "ok  " if rep.ok else "FAIL"
            failures += not rep.ok
            print(f"{flag} {lam.render():<16} [{rep.deformation.kind}] {layers}")
        print(f"-- n={n} done in {time.perf_counter() - start:.2f}s")
    print(f"{failures} failures")


if __name__ == "__main__":
    main()
