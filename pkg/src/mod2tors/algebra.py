"""Exact arithmetic over Z and Q: squares, dense polynomials, rational functions.

Rationals are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator), integers are Python ints.  Nothing here touches
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def is_perfect_square(n: int) -> int | None:
    """Return ``r >= 0`` with ``r*r == n``, or None."""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def rational_is_square(q: Number) -> Fraction | None:
    q = Fraction(q)
    num = is_perfect_square(q.numerator)
    if num is None:
        return None
    den = is_perfect_square(q.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def integer_nth_root(n: int, k: int) -> int | None:
    """Exact k-th root of an integer (sign-aware for odd k), or None."""
    if k == 1:
        return n
    if n < 0:
        if k % 2 == 0:
            return None
        r = integer_nth_root(-n, k)
        return None if r is None else -r
    if n < 2:
        return n
    # Newton from above; converges to floor(n**(1/k)).
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x**k == n else None


def rational_nth_root(q: Number, k: int) -> Fraction | None:
    q = Fraction(q)
    num = integer_nth_root(q.numerator, k)
    if num is None:
        return None
    den = integer_nth_root(q.denominator, k)
    if den is None:
        return None
    return Fraction(num, den)


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of ``|n|`` as ``{prime: exponent}``.

    Trial division followed by Pollard rho / ECM (sympy).  Inputs beyond
    roughly 120 bits with two large prime factors can be slow.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    from sympy import factorint

    return {int(p): int(e) for p, e in factorint(abs(n)).items()}


def squarefree_part(n: int) -> int:
    """Squarefree ``d`` (same sign as n) with ``n = d * s**2``."""
    if n == 0:
        raise ValueError("squarefree part of 0 is undefined")
    d = -1 if n < 0 else 1
    for p, e in factor_int(n).items():
        if e % 2:
            d *= p
    return d


@lru_cache(maxsize=None)
def small_primes(limit: int = 5000) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


class Poly:
    """Dense univariate polynomial over Q, coefficients low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def const(cls, c: Number) -> Poly:
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return "Poly(" + " + ".join(terms).replace("+ -", "- ") + ")"

    @staticmethod
    def _coerce(other: Poly | Number) -> Poly:
        return other if isinstance(other, Poly) else Poly.const(other)

    def __add__(self, other: Poly | Number) -> Poly:
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: Poly | Number) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Number) -> Poly:
        return self._coerce(other) - self

    def __mul__(self, other: Poly | Number) -> Poly:
        if not isinstance(other, Poly):
            c = Fraction(other)
            return Poly(c * a for a in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv_lc = 1 / other.lc
        if len(rem) - 1 < dq:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] * inv_lc
            quot[k] = c
            if c:
                for j, cb in enumerate(other.coeffs):
                    rem[k + j] -= c * cb
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other!r} does not divide {self!r}")
        return q

    def __call__(self, v):
        """Horner evaluation; ``v`` may be a number, a Poly or a RatFunc."""
        acc = 0 * v if not isinstance(v, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        return self * (1 / self.lc)

    def primitive_ints(self) -> list[int]:
        """Integer coefficients of the primitive associate with positive lc."""
        if not self.coeffs:
            return []
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = gcd(g, c)
        if ints[-1] < 0:
            g = -g
        return [c // g for c in ints]


X = Poly.x()


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over Q (zero only when both inputs are zero)."""
    while q:
        p, q = q, p % q
    return p.monic()


def resultant(p: Poly, q: Poly) -> Fraction:
    """Res(p, q) by the Euclidean recursion over Q."""
    if p.is_zero() or q.is_zero():
        return Fraction(0)
    sign = 1
    acc = Fraction(1)
    while True:
        dp, dq = p.degree, q.degree
        if dq == 0:
            return sign * acc * q.lc**dp
        r = p % q
        if r.is_zero():
            return Fraction(0)
        if (dp * dq) % 2:
            sign = -sign
        acc *= q.lc ** (dp - r.degree)
        p, q = q, r


def poly_discriminant(p: Poly) -> Fraction:
    d = p.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    s = -1 if (d * (d - 1) // 2) % 2 else 1
    return s * resultant(p, p.derivative()) / p.lc


def squarefree_poly(p: Poly) -> Poly:
    if p.degree < 1:
        return p
    return p.exact_div(poly_gcd(p, p.derivative()))


# --- rational roots --------------------------------------------------------


def _eval_int(cs: Sequence[int], v: int) -> int:
    acc = 0
    for c in reversed(cs):
        acc = acc * v + c
    return acc


def _eval_mod(cs: Sequence[int], v: int, m: int) -> int:
    acc = 0
    for c in reversed(cs):
        acc = (acc * v + c) % m
    return acc


def _trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _gcd_mod_p(f: list[int], g: list[int], p: int) -> list[int]:
    f = _trim([c % p for c in f])
    g = _trim([c % p for c in g])
    while g:
        inv = pow(g[-1], -1, p)
        while len(f) >= len(g):
            c = f[-1] * inv % p
            shift = len(f) - len(g)
            for j, cg in enumerate(g):
                f[shift + j] = (f[shift + j] - c * cg) % p
            _trim(f)
            if not f:
                break
        f, g = g, f
    return f


def _integer_roots_monic(g: list[int]) -> list[int] | None:
    """Integer roots of a monic integer polynomial with g(0) != 0.

    Hensel-lifts the roots modulo a prime where g stays squarefree.
    Returns None if no such prime is found among the small primes, which
    happens only when g itself is not squarefree.
    """
    dg = [i * c for i, c in enumerate(g)][1:]
    for p in small_primes():
        if len(_gcd_mod_p(g, dg, p)) != 1:
            continue
        residues = [r for r in range(p) if _eval_mod(g, r, p) == 0]
        if not residues:
            return []
        bound = min(abs(g[0]), 1 + max(abs(c) for c in g[:-1]))
        out = []
        for r in residues:
            m = p
            while m <= 2 * bound:
                m2 = m * m
                r = (r - _eval_mod(g, r, m2) * pow(_eval_mod(dg, r, m2), -1, m2)) % m2
                m = m2
            y = r if r <= m // 2 else r - m
            if _eval_int(g, y) == 0:
                out.append(y)
        return out
    return None


def rational_roots(p: Poly) -> list[Fraction]:
    """Distinct rational roots of ``p``, ascending."""
    if p.is_zero():
        raise ValueError("zero polynomial has all roots")
    f = p.primitive_ints()
    roots: set[Fraction] = set()
    k = 0
    while f[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
        f = f[k:]
    if len(f) > 1:
        found = _nonzero_rational_roots(f)
        if found is None:
            sq = squarefree_poly(Poly(f)).primitive_ints()
            found = _nonzero_rational_roots(sq)
            if found is None:  # pragma: no cover - squarefree input always has a good prime
                raise ArithmeticError("no good prime for root finding")
        roots.update(found)
    return sorted(roots)


def _nonzero_rational_roots(f: list[int]) -> list[Fraction] | None:
    n = len(f) - 1
    lead = f[-1]
    # y = lead * x turns f into a monic integer polynomial.
    g = [f[i] * lead ** (n - 1 - i) for i in range(n)] + [1]
    ys = _integer_roots_monic(g)
    if ys is None:
        return None
    return [Fraction(y, lead) for y in ys]


# --- rational functions ----------------------------------------------------


class RatFunc:
    """Quotient of polynomials over Q in canonical form (monic, coprime)."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly | Number, den: Poly | Number = 1):
        num = Poly._coerce(num)
        den = Poly._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lc
        self.num = num * (1 / lc)
        self.den = den * (1 / lc)

    @staticmethod
    def _coerce(other) -> RatFunc:
        return other if isinstance(other, RatFunc) else RatFunc(other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r} / {self.den!r})"

    def __add__(self, other) -> RatFunc:
        o = self._coerce(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> RatFunc:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> RatFunc:
        return self._coerce(other) - self

    def __mul__(self, other) -> RatFunc:
        o = self._coerce(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatFunc:
        o = self._coerce(other)
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> RatFunc:
        return self._coerce(other) / self

    def __pow__(self, n: int) -> RatFunc:
        if n < 0:
            return RatFunc(self.den**-n, self.num**-n)
        return RatFunc(self.num**n, self.den**n)

    def __call__(self, v):
        """Evaluate at a number or compose with a Poly/RatFunc."""
        if isinstance(v, (int, Fraction)):
            return self.num(v) / self.den(v)
        v = self._coerce(v)
        return self.num(v) / self.den(v)


def ratfunc_equal(f: RatFunc, g: RatFunc) -> bool:
    return f.num * g.den == g.num * f.den
