"""Search Kubert's Tate-normal-form families for one curve per torsion row.

Prints lines in the curve-file format (label a1 a2 a3 a4 a6).  The bundled
fixtures/table_rows.curves was produced by this script.

    python scripts/find_table_rows.py
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from mod2tors.curves import LongModel, SingularCurveError
from mod2tors.families import tate
from mod2tors.galois2 import discriminant_is_square, mod2_image
from mod2tors.torsion import torsion_subgroup


def kubert(shape: str, t: Fraction) -> tuple[Fraction, Fraction]:
    """Tate parameters (b, c) for the families with a point of the given order."""
    if shape == "C4":
        return t, Fraction(0)
    if shape == "C2xC4":
        return t * t - Fraction(1, 16), Fraction(0)
    if shape == "C5":
        return t, t
    if shape in ("C6", "C2xC6"):
        c = t if shape == "C6" else (10 - 2 * t) / (t * t - 9)
        return c + c * c, c
    if shape == "C7":
        return t**3 - t * t, t * t - t
    if shape in ("C8", "C2xC8"):
        b = (2 * t - 1) * (t - 1)
        return b, b / t
    if shape == "C9":
        c = t * t * (t - 1)
        return c * (t * t - t + 1), c
    if shape == "C10":
        d = t * t - 3 * t + 1
        return t**3 * (t - 1) * (2 * t - 1) / d**2, -t * (t - 1) * (2 * t - 1) / d
    if shape == "C12":
        return (
            t * (2 * t - 1) * (2 * t * t - 2 * t + 1) * (3 * t * t - 3 * t + 1) / (t - 1) ** 4,
            -t * (2 * t - 1) * (3 * t * t - 3 * t + 1) / (t - 1) ** 3,
        )
    raise ValueError(shape)


def integral(E: LongModel) -> tuple[int, ...]:
    u = lcm(*(c.denominator for c in E.ainvs))
    return tuple(int(c * u**w) for c, w in zip(E.ainvs, (1, 2, 3, 4, 6)))


def small_rationals(h: int):
    for q in range(1, h + 1):
        for p in range(-h, h + 1):
            if p and Fraction(p, q).denominator == q:
                yield Fraction(p, q)


def find(shape: str, h: int = 12) -> tuple[int, ...] | None:
    best = None
    for t in small_rationals(h):
        try:
            E = tate(*kubert(shape, t))
        except (SingularCurveError, ZeroDivisionError):
            continue
        a = integral(E)
        try:
            if torsion_subgroup(LongModel(*a)).shape != shape:
                continue
        except SingularCurveError:
            continue
        size = max(abs(x) for x in a)
        if best is None or size < best[0]:
            best = (size, a)
    return None if best is None else best[1]


def main() -> None:
    rows = ["C4", "C5", "C6", "C7", "C8", "C9", "C10", "C12", "C2xC4", "C2xC6", "C2xC8"]
    for shape in rows:
        a = find(shape, 8 if shape in ("C12", "C2xC8", "C10") else 12)
        if a is None:
            print(f"# {shape}: not found")
            continue
        E = LongModel(*a)
        print(f"{shape}_row", *a, f"# {mod2_image(E)} square={discriminant_is_square(E)}")


if __name__ == "__main__":
    main()
