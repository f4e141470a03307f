"""Time the D_n point searches at increasing height bounds.

python scripts/dsearch_sweep.py --heights 100 300 1000 --workers 4
"""

from __future__ import annotations

import argparse
import time

from mod2tors.families import d_search


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--heights", type=int, nargs="+", default=[100, 300, 1000])
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    for h in args.heights:
        for n in (5, 7, 9):
            t0 = time.perf_counter()
            pts = d_search(n, h, workers=args.workers)
            dt = time.perf_counter() - t0
            shown = ", ".join(f"({a}, {z})" for a, z in pts)
            print(f"D{n} height {h:>5}: {shown}  [{dt:.2f}s]")


if __name__ == "__main__":
    main()
