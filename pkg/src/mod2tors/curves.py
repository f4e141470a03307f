"""Weierstrass models over Q, the chord-tangent group law, division polynomials.

Division polynomial convention: for Y^2 = X^3 + AX + B,

    Psi_2(X) = X^3 + AX + B
    Psi_3(X) = 3X^4 + 6AX^2 + 12BX - A^2

and in general Psi_n is the y-free polynomial whose roots are exactly the
x-coordinates of the nonzero points of E[n].  For odd n this is the usual
psi_n; for even n it is (X^3 + AX + B) * psi_n / (2y).  This makes the
clause "Psi_3(alpha) = 0 and Psi_2(alpha) = beta^2" mean literally "there is
a rational point of order 3 with x = alpha".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .algebra import (
    Number,
    Poly,
    factor_int,
    rational_is_square,
    rational_nth_root,
)


class SingularCurveError(ValueError):
    pass


class OffCurveError(ValueError):
    pass


@dataclass(frozen=True)
class Point:
    """Affine point (x, y) or the point at infinity (x = y = None)."""

    x: Fraction | None = None
    y: Fraction | None = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("a point needs both coordinates or neither")
        if self.x is not None:
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __repr__(self) -> str:
        if self.is_infinity:
            return "Point(inf)"
        return f"Point({self.x}, {self.y})"


INFINITY = Point()


def short_discriminant(A: Number, B: Number) -> Fraction | int:
    return -16 * (4 * A**3 + 27 * B**2)


class _Weierstrass:
    """Group law shared by long and short models, driven by a-invariants."""

    @property
    def ainvs(self) -> tuple[Fraction, ...]:
        raise NotImplementedError

    def contains(self, P: Point) -> bool:
        if P.is_infinity:
            return True
        a1, a2, a3, a4, a6 = self.ainvs
        x, y = P.x, P.y
        return y * y + a1 * x * y + a3 * y == x**3 + a2 * x * x + a4 * x + a6

    def neg(self, P: Point) -> Point:
        if P.is_infinity:
            return P
        a1, _, a3, _, _ = self.ainvs
        return Point(P.x, -P.y - a1 * P.x - a3)

    def _add(self, P: Point, Q: Point) -> Point:
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        a1, a2, a3, a4, a6 = self.ainvs
        x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
        if x1 == x2:
            if y1 + y2 + a1 * x2 + a3 == 0:
                return INFINITY
            den = 2 * y1 + a1 * x1 + a3
            lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / den
            nu = (-(x1**3) + a4 * x1 + 2 * a6 - a3 * y1) / den
        else:
            lam = (y2 - y1) / (x2 - x1)
            nu = (y1 * x2 - y2 * x1) / (x2 - x1)
        x3 = lam * lam + a1 * lam - a2 - x1 - x2
        y3 = -(lam + a1) * x3 - nu - a3
        return Point(x3, y3)

    def _mul(self, n: int, P: Point) -> Point:
        if n < 0:
            return self._mul(-n, self.neg(P))
        result, base = INFINITY, P
        while n:
            if n & 1:
                result = self._add(result, base)
            base = self._add(base, base)
            n >>= 1
        return result

    def _check(self, *points: Point) -> None:
        for P in points:
            if not self.contains(P):
                raise OffCurveError(f"{P} is not on {self}")

    def add(self, P: Point, Q: Point) -> Point:
        self._check(P, Q)
        return self._add(P, Q)

    def mul(self, n: int, P: Point) -> Point:
        self._check(P)
        return self._mul(n, P)

    def order(self, P: Point, limit: int = 12) -> int | None:
        """Order of P if it is at most ``limit``, else None."""
        self._check(P)
        Q = P
        for k in range(1, limit + 1):
            if Q.is_infinity:
                return k
            Q = self._add(Q, P)
        return None


@dataclass(frozen=True)
class LongModel(_Weierstrass):
    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.discriminant == 0:
            raise SingularCurveError(f"singular model [{', '.join(map(str, self.ainvs))}]")

    @property
    def ainvs(self) -> tuple[Fraction, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b2(self) -> Fraction:
        return self.a1**2 + 4 * self.a2

    @property
    def b4(self) -> Fraction:
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self) -> Fraction:
        return self.a3**2 + 4 * self.a6

    @property
    def b8(self) -> Fraction:
        a1, a2, a3, a4, a6 = self.ainvs
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @property
    def c4(self) -> Fraction:
        return self.b2**2 - 24 * self.b4

    @property
    def c6(self) -> Fraction:
        return -(self.b2**3) + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def discriminant(self) -> Fraction:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def j_invariant(self) -> Fraction:
        return self.c4**3 / self.discriminant

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.ainvs)

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.ainvs) + "]"


@dataclass(frozen=True)
class ShortModel(_Weierstrass):
    """Y^2 = X^3 + A X + B with integer A, B."""

    A: int
    B: int

    def __post_init__(self):
        for name in ("A", "B"):
            v = getattr(self, name)
            if isinstance(v, Fraction):
                if v.denominator != 1:
                    raise ValueError(f"short model coefficients must be integers, got {name}={v}")
                object.__setattr__(self, name, int(v))
            elif not isinstance(v, int):
                raise TypeError(f"{name} must be an integer")
        if self.discriminant == 0:
            raise SingularCurveError(f"singular model Y^2 = X^3 + {self.A}X + {self.B}")

    @property
    def ainvs(self) -> tuple[Fraction, ...]:
        return (Fraction(0), Fraction(0), Fraction(0), Fraction(self.A), Fraction(self.B))

    @property
    def discriminant(self) -> int:
        return short_discriminant(self.A, self.B)

    @property
    def j_invariant(self) -> Fraction:
        return Fraction(-1728 * (4 * self.A) ** 3, self.discriminant)

    @property
    def rhs(self) -> Poly:
        return Poly([self.B, self.A, 0, 1])

    def to_long(self) -> LongModel:
        return LongModel(0, 0, 0, self.A, self.B)

    def twist(self, u: Number) -> ShortModel:
        """The isomorphic model (u^4 A, u^6 B)."""
        u = Fraction(u)
        return ShortModel(u**4 * self.A, u**6 * self.B)

    def __str__(self) -> str:
        return f"Y^2 = X^3 + ({self.A})X + ({self.B})"


Model = Union[ShortModel, LongModel]


def discriminant(E: Model) -> Fraction | int:
    return E.discriminant


def add(E: Model, P: Point, Q: Point) -> Point:
    return E.add(P, Q)


def mul(E: Model, n: int, P: Point) -> Point:
    return E.mul(n, P)


# --- long -> short ----------------------------------------------------------


@dataclass(frozen=True)
class ShortIsomorphism:
    """Map from a long model onto an integral short model.

    ``short.discriminant == u**12 * long.discriminant``.
    """

    long: LongModel
    short: ShortModel
    u: Fraction

    def map_point(self, P: Point) -> Point:
        if P.is_infinity:
            return P
        E = self.long
        t = self.u / 6
        X = 36 * P.x + 3 * E.b2
        Y = 108 * (2 * P.y + E.a1 * P.x + E.a3)
        return Point(t * t * X, t**3 * Y)


def short_coefficients(E: LongModel) -> tuple[Fraction, Fraction]:
    """(-27 c4, -54 c6), before clearing denominators."""
    return -27 * E.c4, -54 * E.c6


def _clearing_scale(A: Fraction, B: Fraction) -> int:
    """Least t > 0 with t^4 A and t^6 B integral."""
    den = A.denominator * B.denominator
    t = 1
    if den == 1:
        return t
    for p in factor_int(den):
        va = _val(A.denominator, p)
        vb = _val(B.denominator, p)
        k = max(-(-va // 4), -(-vb // 6))
        t *= p**k
    return t


def _val(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def to_short(E: LongModel) -> ShortIsomorphism:
    A, B = short_coefficients(E)
    t = _clearing_scale(A, B)
    return ShortIsomorphism(E, ShortModel(A * t**4, B * t**6), Fraction(6 * t))


def long_to_short(E: LongModel) -> ShortModel:
    return to_short(E).short


def as_short(E: Model) -> ShortModel:
    return E if isinstance(E, ShortModel) else long_to_short(E)


def is_isomorphic(E1: ShortModel, E2: ShortModel) -> Fraction | None:
    """Positive u with (A2, B2) = (u^4 A1, u^6 B1), or None."""
    if (E1.A == 0) != (E2.A == 0) or (E1.B == 0) != (E2.B == 0):
        return None
    if E1.A and E1.B:
        # B2 A1 / (B1 A2) = u^2
        u = rational_is_square(Fraction(E2.B * E1.A, E1.B * E2.A))
    elif E1.A:
        u = rational_nth_root(Fraction(E2.A, E1.A), 4)
    else:
        u = rational_nth_root(Fraction(E2.B, E1.B), 6)
        if u is not None:
            u = abs(u)
    if u is None or u == 0:
        return None
    if u**4 * E1.A == E2.A and u**6 * E1.B == E2.B:
        return u
    return None


# --- division polynomials ---------------------------------------------------


def _imul(f: list[int], g: list[int]) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _isub(f: list[int], g: list[int]) -> list[int]:
    n = max(len(f), len(g))
    out = [(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


@lru_cache(maxsize=256)
def _psi_table(A: int, B: int, n: int) -> tuple[tuple[int, ...], ...]:
    """P_k for k = 0..n where psi_k = P_k * y^(k mod 2 == 0)."""
    F = [B, A, 0, 1]
    F2 = _imul(F, F)
    P: list[list[int]] = [
        [],
        [1],
        [2],
        [-A * A, 12 * B, 6 * A, 0, 3],
        [4 * c for c in (-8 * B * B - A**3, -4 * A * B, -5 * A * A, 20 * B, 5 * A, 0, 1)],
    ]
    for k in range(5, n + 1):
        m = k // 2
        if k % 2:
            t1 = _imul(P[m + 2], _imul(P[m], _imul(P[m], P[m])))
            t2 = _imul(P[m - 1], _imul(P[m + 1], _imul(P[m + 1], P[m + 1])))
            if m % 2 == 0:
                t1 = _imul(t1, F2)
            else:
                t2 = _imul(t2, F2)
            P.append(_isub(t1, t2))
        else:
            inner = _isub(
                _imul(P[m + 2], _imul(P[m - 1], P[m - 1])),
                _imul(P[m - 2], _imul(P[m + 1], P[m + 1])),
            )
            prod = _imul(P[m], inner)
            P.append([c // 2 for c in prod])
    return tuple(tuple(p) for p in P[: n + 1])


def division_polynomial(E: ShortModel, n: int) -> Poly:
    """Psi_n in the y-free convention described in the module docstring."""
    if not 2 <= n <= 12:
        raise ValueError(f"division polynomial index {n} outside 2..12")
    Pn = list(_psi_table(E.A, E.B, n)[n])
    if n % 2:
        return Poly(Pn)
    return Poly([c // 2 for c in _imul([E.B, E.A, 0, 1], Pn)])


@lru_cache(maxsize=1024)
def _exact_order_factor(A: int, B: int, n: int) -> Poly:
    E = ShortModel(A, B)
    out = division_polynomial(E, n)
    for d in range(2, n):
        if n % d == 0:
            out = out.exact_div(_exact_order_factor(A, B, d))
    return out


def exact_order_factor(E: ShortModel, n: int) -> Poly:
    """Factor of Psi_n whose roots are x-coordinates of points of exact order n."""
    if not 2 <= n <= 12:
        raise ValueError(f"division polynomial index {n} outside 2..12")
    return _exact_order_factor(E.A, E.B, n)
