"""Rational torsion subgroups via division polynomials.

The search is restricted by the good-reduction bound: a point of order n
can only exist when n divides gcd #E(F_p).  Points of 2-power order come
from the cubic and the exact-order factors for 4 and 8; the odd part from
the exact-order factors for 3, 5, 7, 9.  Every candidate's order is
confirmed with the group law before the group is assembled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .algebra import rational_is_square, rational_roots, small_primes
from .curves import INFINITY, Model, Point, ShortModel, as_short, exact_order_factor

MAZUR_SHAPES = (
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C12",
    "C2xC2", "C2xC4", "C2xC6", "C2xC8",
)  # fmt: skip

GOOD_PRIME_COUNT = 8


class BadPrimeError(ValueError):
    pass


class TorsionConsistencyError(ArithmeticError):
    pass


@dataclass(frozen=True)
class TorsionGroup:
    shape: str
    generators: tuple[Point, ...] = field(default=())

    @property
    def order(self) -> int:
        if "x" in self.shape:
            m, n = self.shape.split("x")
            return int(m[1:]) * int(n[1:])
        return int(self.shape[1:])

    @property
    def is_cyclic(self) -> bool:
        return "x" not in self.shape

    def __str__(self) -> str:
        return self.shape


def count_points_mod_p(E: ShortModel, p: int) -> int:
    """#E(F_p) including the point at infinity, by a direct loop."""
    if p < 3 or E.discriminant % p == 0:
        raise BadPrimeError(f"{p} is not an odd prime of good reduction")
    A, B = E.A % p, E.B % p
    squares = [0] * p
    for t in range(1, p):
        squares[t * t % p] = 2
    squares[0] = 1
    return 1 + sum(squares[(x * x * x + A * x + B) % p] for x in range(p))


def good_primes(E: ShortModel, count: int = GOOD_PRIME_COUNT) -> list[int]:
    disc = E.discriminant
    out = []
    for p in small_primes():
        if p > 2 and disc % p:
            out.append(p)
            if len(out) == count:
                return out
    raise ArithmeticError("ran out of small primes")  # pragma: no cover


def torsion_bound(E: Model) -> int:
    """gcd of #E(F_p) over the first eight odd good primes; a multiple of #E(Q)_tors."""
    E = as_short(E)
    g = 0
    for p in good_primes(E):
        g = gcd(g, count_points_mod_p(E, p))
    return g


def _points_of_exact_order(E: ShortModel, n: int) -> list[Point]:
    out = []
    if n == 2:
        xs = rational_roots(E.rhs)
    else:
        xs = rational_roots(exact_order_factor(E, n))
    for x in xs:
        y = rational_is_square(E.rhs(x))
        if y is None:
            continue
        for P in {Point(x, y), Point(x, -y)}:
            if E.order(P, n) != n:
                raise TorsionConsistencyError(f"{P} on {E} should have order {n}")
            out.append(P)
    return sorted(out, key=lambda P: (P.x, P.y))


def torsion_points(E: Model) -> dict[Point, int]:
    """All nonzero rational torsion points with their orders."""
    E = as_short(E)
    bound = torsion_bound(E)
    pts: dict[Point, int] = {}
    for n in (2, 4, 8):
        if bound % n:
            break
        found = _points_of_exact_order(E, n)
        if not found:
            break
        pts.update((P, n) for P in found)
    for n in (3, 5, 7, 9):
        if bound % n or (n == 9 and 3 not in pts.values()):
            continue
        pts.update((P, n) for P in _points_of_exact_order(E, n))
    return pts


def _generated(E: ShortModel, gens: tuple[Point, ...]) -> set[Point]:
    group = {INFINITY}
    frontier = [INFINITY]
    while frontier:
        P = frontier.pop()
        for g in gens:
            Q = E._add(P, g)
            if Q not in group:
                group.add(Q)
                frontier.append(Q)
    return group


def torsion_subgroup(E: Model) -> TorsionGroup:
    """E(Q)_tors as one of Mazur's fifteen groups, with generators on the short model."""
    E = as_short(E)
    pts = torsion_points(E)
    bound = torsion_bound(E)

    def key(P: Point):
        return (P.x, P.y)

    two_part = sorted((P for P, n in pts.items() if n & (n - 1) == 0), key=key)
    odd_part = sorted((P for P, n in pts.items() if n % 2), key=key)
    two_torsion = [P for P in two_part if pts[P] == 2]

    m2 = max((pts[P] for P in two_part), default=1)
    m_odd = max((pts[P] for P in odd_part), default=1)
    if 1 + len(odd_part) != m_odd:
        raise TorsionConsistencyError(f"odd part of {E} is not cyclic")
    noncyclic = len(two_torsion) == 3
    if 1 + len(two_part) != (2 * m2 if noncyclic else m2):
        raise TorsionConsistencyError(f"2-part of {E} has unexpected size")

    N = m2 * m_odd
    shape = f"C2xC{N}" if noncyclic else f"C{N}"
    if shape not in MAZUR_SHAPES:
        raise TorsionConsistencyError(f"{shape} for {E} is not in Mazur's list")

    if N == 1:
        gens: tuple[Point, ...] = ()
    else:
        g = INFINITY
        if m2 > 1:
            g = E._add(g, next(P for P in two_part if pts[P] == m2))
        if m_odd > 1:
            g = E._add(g, next(P for P in odd_part if pts[P] == m_odd))
        gens = (g,)
        if noncyclic:
            inside = E._mul(N // 2, g)
            gens += (next(T for T in two_torsion if T != inside),)

    group = TorsionGroup(shape, gens)
    if bound % group.order:
        raise TorsionConsistencyError(f"#{shape} does not divide the bound {bound}")
    if len(_generated(E, gens)) != group.order:
        raise TorsionConsistencyError(f"generators of {E} do not generate {shape}")
    return group
