"""Arithmetic in Z[rho], rho = (1 + sqrt(-3))/2, with rho**2 = rho - 1.

Elements are ``a + b*rho`` with integer a, b.  The ring is norm-Euclidean,
so gcd and unique factorization are computed with plain division with
remainder.  Every nonzero element has exactly one associate with a > 0 and
b >= 0; that one is the canonical representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import factor_int


@dataclass(frozen=True, order=True)
class EisInt:
    a: int
    b: int = 0

    @classmethod
    def from_sqrt3(cls, x: int, y: int) -> EisInt:
        """The element x + y*sqrt(-3) (sqrt(-3) = 2*rho - 1)."""
        return cls(x - y, 2 * y)

    def to_sqrt3(self) -> tuple[Fraction, Fraction]:
        """Coordinates (x, y) with self = x + y*sqrt(-3)."""
        return Fraction(2 * self.a + self.b, 2), Fraction(self.b, 2)

    def __add__(self, other: EisInt | int) -> EisInt:
        o = _lift(other)
        return EisInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> EisInt:
        return EisInt(-self.a, -self.b)

    def __sub__(self, other: EisInt | int) -> EisInt:
        return self + (-_lift(other))

    def __rsub__(self, other: int) -> EisInt:
        return _lift(other) - self

    def __mul__(self, other: EisInt | int) -> EisInt:
        o = _lift(other)
        a, b, c, d = self.a, self.b, o.a, o.b
        return EisInt(a * c - b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> EisInt:
        if n < 0:
            raise ValueError("negative power in Z[rho]")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> EisInt:
        # conj(rho) = 1 - rho
        return EisInt(self.a + self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a + self.a * self.b + self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def __divmod__(self, other: EisInt | int) -> tuple[EisInt, EisInt]:
        o = _lift(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[rho]")
        t = self * o.conj()
        q = EisInt(_round_half_up(t.a, n), _round_half_up(t.b, n))
        return q, self - q * o

    def __floordiv__(self, other: EisInt | int) -> EisInt:
        return divmod(self, other)[0]

    def __mod__(self, other: EisInt | int) -> EisInt:
        return divmod(self, other)[1]

    def divides(self, other: EisInt | int) -> bool:
        if self.is_zero():
            return _lift(other).is_zero()
        return (_lift(other) % self).is_zero()

    def exact_div(self, other: EisInt | int) -> EisInt:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def associates(self) -> list[EisInt]:
        return [u * self for u in UNITS]

    def canonical(self) -> EisInt:
        if self.is_zero():
            return self
        return max(g for g in self.associates() if g.a > 0 and g.b >= 0)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}ρ"
        return f"{self.a}{self.b:+d}ρ"


def _lift(v: EisInt | int) -> EisInt:
    return v if isinstance(v, EisInt) else EisInt(v, 0)


def _round_half_up(num: int, den: int) -> int:
    return (2 * num + den) // (2 * den)


ZERO = EisInt(0, 0)
ONE = EisInt(1, 0)
RHO = EisInt(0, 1)
# rho is a primitive sixth root of unity: UNITS[k] == rho**k.
UNITS: tuple[EisInt, ...] = (
    EisInt(1, 0),
    EisInt(0, 1),
    EisInt(-1, 1),
    EisInt(-1, 0),
    EisInt(0, -1),
    EisInt(1, -1),
)
RAMIFIED = EisInt(1, 1)  # norm 3


def norm(g: EisInt) -> int:
    return g.norm()


def unit_index(u: EisInt) -> int:
    """k with u == rho**k."""
    return UNITS.index(u)


def eis_gcd(g: EisInt, h: EisInt) -> EisInt:
    if g.is_zero() and h.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not h.is_zero():
        g, h = h, g % h
    return g.canonical()


@dataclass(frozen=True)
class EisFactorization:
    unit: EisInt
    factors: tuple[tuple[EisInt, int], ...]

    def expand(self) -> EisInt:
        out = self.unit
        for p, e in self.factors:
            out = out * p**e
        return out


def _sqrt_minus3_mod(p: int) -> int:
    from sympy.ntheory import sqrt_mod

    return min(sqrt_mod(-3 % p, p, all_roots=True))


def split_prime(p: int) -> EisInt:
    """A canonical Eisenstein prime of norm p, for a rational prime p = 1 mod 3."""
    s = _sqrt_minus3_mod(p)
    # rho = (1 + sqrt(-3))/2 is congruent to r modulo one prime above p.
    r = (1 + s) * pow(2, -1, p) % p
    pi = eis_gcd(EisInt(p), EisInt(-r, 1))
    if pi.norm() != p:  # pragma: no cover - would mean r is not a root of X^2 - X + 1
        raise ArithmeticError(f"failed to split {p}")
    return pi


def eis_factor(g: EisInt) -> EisFactorization:
    """Factor g into canonical primes times a unit."""
    if g.is_zero():
        raise ValueError("cannot factor 0")
    rest = g
    found: list[tuple[EisInt, int]] = []

    def strip(pi: EisInt) -> None:
        nonlocal rest
        e = 0
        while True:
            q, r = divmod(rest, pi)
            if not r.is_zero():
                break
            rest, e = q, e + 1
        if e:
            found.append((pi, e))

    n = g.norm()
    if n > 1:
        for p in sorted(factor_int(n)):
            if p == 3:
                strip(RAMIFIED)
            elif p % 3 == 2:
                strip(EisInt(p))
            else:
                pi = split_prime(p)
                strip(pi)
                strip(pi.conj().canonical())
    if not rest.is_unit():  # pragma: no cover
        raise ArithmeticError(f"factorization of {g} left a non-unit {rest}")
    found.sort(key=lambda pe: (pe[0].norm(), pe[0].a, pe[0].b))
    return EisFactorization(rest, tuple(found))


def eis_cube_classify(g: EisInt) -> tuple[EisInt, EisInt] | None:
    """Write g = unit * beta**3 if possible; beta is canonical."""
    fac = eis_factor(g)
    if any(e % 3 for _, e in fac.factors):
        return None
    beta = ONE
    for p, e in fac.factors:
        beta = beta * p ** (e // 3)
    beta = beta.canonical()
    return g.exact_div(beta**3), beta
