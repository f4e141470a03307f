"""Tally torsion and mod-2 image over the E_alt parameter box [-r, r]^4.

Writes the curves to a curve file (optional) and prints the same report
the ``scan`` subcommand produces, plus the image counts.

    python scripts/e_alt_census.py --radius 4 --out e_alt.curves
"""

from __future__ import annotations

import argparse
import itertools
from collections import Counter

from mod2tors.curvefile import CurveRecord
from mod2tors.curves import SingularCurveError
from mod2tors.families import e_alt
from mod2tors.galois2 import mod2_image
from mod2tors.report import run_scan


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--radius", type=int, default=3)
    ap.add_argument("--out", help="also write the nonsingular curves here")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    r = args.radius
    seen: dict[tuple[int, int], tuple[int, ...]] = {}
    for p in itertools.product(range(-r, r + 1), repeat=4):
        try:
            E = e_alt(p)
        except SingularCurveError:
            continue
        seen.setdefault((E.A, E.B), p)

    records = [
        CurveRecord("ealt_" + "_".join(map(str, p)).replace("-", "m"), (0, 0, 0, A, B), i + 1)
        for i, ((A, B), p) in enumerate(sorted(seen.items()))
    ]
    if args.out:
        with open(args.out, "w") as fh:
            fh.writelines(rec.to_line() + "\n" for rec in records)

    print(run_scan(records, workers=args.workers).to_text(), end="")
    images = Counter(mod2_image(rec.short).value for rec in records)
    print("images", dict(sorted(images.items())))


if __name__ == "__main__":
    main()
