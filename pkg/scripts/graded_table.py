"""Print graded dimensions and defects for every multipartition of n.

    python scripts/graded_table.py --n 4 --level 2 --e 3 --charge 0,1
"""

import argparse

from specht.arith import INFINITY
from specht.graded import defect, graded_dimension, y_exponents
from specht.tableaux import count_standard_tableaux, multipartitions


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--level", type=int, default=1)
    ap.add_argument("--e", default="inf")
    ap.add_argument("--charge", default=None)
    args = ap.parse_args()

    e = INFINITY if args.e in ("inf", "oo") else int(args.e)
    charge = tuple(int(x) for x in args.charge.split(",")) if args.charge else (0,) * args.level
    if len(charge) != args.level:
        raise SystemExit("charge length must equal the level")

    print(f"{'lambda':<18}{'|Std|':>6}  {'defect':>6}  {'y-exponents':<20}graded dimension")
    for lam in multipartitions(args.n, args.level):
        ys = ",".join(map(str, y_exponents(lam, charge, e)))
        dim = str(graded_dimension(lam, charge, e))
        print(f"{lam.render():<18}{count_standard_tableaux(lam):>6}  {defect(lam, charge, e):>6}  {ys:<20}{dim}")


if __name__ == "__main__":
    main()
