"""Image of the mod-2 Galois representation, and the sets S_2 / S_3."""

from __future__ import annotations

from enum import Enum

from .algebra import rational_is_square, rational_roots
from .curves import INFINITY, Model, Point, ShortModel, as_short, division_polynomial


class Mod2Image(str, Enum):
    Id = "Id"
    C2 = "C2"
    C3 = "C3"
    S3 = "S3"

    def __str__(self) -> str:
        return self.value


def two_torsion_points(E: Model) -> list[Point]:
    E = as_short(E)
    return [Point(r, 0) for r in rational_roots(E.rhs)]


def two_torsion_order(E: Model) -> int:
    """#E(Q)[2], counting the point at infinity."""
    return 1 + len(two_torsion_points(E))


def sqrt_discriminant(E: Model):
    """Nonnegative rational square root of the discriminant, or None."""
    return rational_is_square(E.discriminant)


def discriminant_is_square(E: Model) -> bool:
    return sqrt_discriminant(E) is not None


def mod2_image(E: Model) -> Mod2Image:
    square = discriminant_is_square(E)
    if two_torsion_order(E) == 1:
        return Mod2Image.C3 if square else Mod2Image.S3
    return Mod2Image.Id if square else Mod2Image.C2


def in_S2(p) -> bool:
    """Psi_2 of E_alt(p) has three integer roots.

    For an integral short model the cubic is monic, so rational roots are
    integers anyway; the integrality test is kept literal.
    """
    from .families import e_alt

    roots = rational_roots(e_alt(p).rhs)
    return len(roots) == 3 and all(r.denominator == 1 for r in roots)


def three_torsion_witness(E: ShortModel) -> Point:
    """A rational point of order 3 (x a root of Psi_3, Psi_2(x) a square), or INFINITY."""
    for x in rational_roots(division_polynomial(E, 3)):
        y = rational_is_square(E.rhs(x))
        if y is not None:
            return Point(x, y)
    return INFINITY


def in_S3(p) -> bool:
    from .families import e_alt

    return not three_torsion_witness(e_alt(p)).is_infinity
