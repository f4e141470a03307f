"""Parametric families of curves with prescribed torsion or square discriminant.

Every constructor checks its output against closed forms: the known
short-form coefficients of E_5/E_7/E_9, the discriminant formulas
Delta_3 ... Delta_9, and the factorizations of the discriminants of the
square-discriminant families.  A failed check raises AssertionError, which
signals a bug here rather than bad input.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    Number,
    Poly,
    RatFunc,
    X,
    is_perfect_square,
    poly_discriminant,
    rational_is_square,
    rational_roots,
)
from .curves import (
    LongModel,
    Point,
    ShortModel,
    SingularCurveError,
    is_isomorphic,
    short_coefficients,
    short_discriminant,
    to_short,
)
from .fermat import FermatParams, decompose, forward_xyz

# --- E_3 --------------------------------------------------------------------


def delta3(alpha: int, beta: int) -> int:
    return -(2**4) * 3**3 * (5 * alpha**3 + beta) * (9 * alpha**3 + beta) ** 3


def e3_coefficients(alpha: int, beta: int) -> tuple[int, int]:
    """(A, B) of E_3(alpha, beta), singular or not."""
    return 27 * alpha**4 + 6 * alpha * beta, beta**2 - 27 * alpha**6


def e3(alpha: int, beta: int) -> ShortModel:
    """Y^2 = X^3 + (27a^4 + 6ab)X + b^2 - 27a^6; (3a^2, 9a^3 + b) has order 3."""
    A, B = e3_coefficients(alpha, beta)
    d = delta3(alpha, beta)
    if d == 0:
        raise SingularCurveError(f"E3({alpha}, {beta}) is singular")
    assert short_discriminant(A, B) == d
    return ShortModel(A, B)


def e3_point(alpha: int, beta: int) -> Point:
    return Point(3 * alpha**2, 9 * alpha**3 + beta)


# --- Tate normal form and E_5, E_7, E_9 ------------------------------------


def tate(b: Number, c: Number) -> LongModel:
    """Y^2 + (1 - c)XY - bY = X^3 - bX^2; (0, 0) lies on it."""
    b, c = Fraction(b), Fraction(c)
    if b == 0:
        raise SingularCurveError("Tate normal form needs b != 0")
    return LongModel(1 - c, -b, -b, 0, 0)


def _tate_params(n: int, a: Fraction) -> tuple[Fraction, Fraction]:
    if n == 5:
        return a, a
    if n == 7:
        return a * a * (a - 1), a * (a - 1)
    if n == 9:
        return a * a * (a - 1) * (a * (a - 1) + 1), a * a * (a - 1)
    raise ValueError(f"no one-parameter family for n={n}")


_F5 = X * (X * X - 11 * X - 1)
_F7 = X * (X - 1) * (X**3 - 8 * X * X + 5 * X + 1)
_F9 = X * (X - 1) * (X * X - X + 1) * (X**3 - 6 * X * X + 3 * X + 1)

_DELTA_N = {
    5: X**5 * (X * X - 11 * X - 1),
    7: X**7 * (X - 1) ** 7 * (X**3 - 8 * X * X + 5 * X + 1),
    9: X**9 * (X - 1) ** 9 * (X * X - X + 1) ** 3 * (X**3 - 6 * X * X + 3 * X + 1),
}


def delta_n(n: int, alpha: Number) -> Fraction:
    return 2**12 * 3**12 * _DELTA_N[n](Fraction(alpha))


def _p(*coeffs: int) -> Poly:
    """Polynomial from coefficients listed from the top degree down."""
    return Poly(reversed(coeffs))


# Closed-form short-model coefficients of E_5, E_7, E_9.
E_N_SHORT_FORMS: dict[int, tuple[Poly, Poly]] = {
    5: (
        -27 * _p(1, -12, 14, 12, 1),
        54 * (X * X + 1) * _p(1, -18, 74, 18, 1),
    ),
    7: (
        -27 * _p(1, -12, 42, -56, 35, 0, -14, 4, 1),
        54 * _p(1, -18, 117, -354, 570, -486, 273, -222, 174, -46, -15, 6, 1),
    ),
    9: (
        -27 * _p(1, -3, 0, 1) * _p(1, -9, 27, -48, 54, -45, 27, -9, 0, 1),
        54 * _p(1, -18, 135, -570, 1557, -2970, 4128, -4230, 3240, -2032,
                1359, -1080, 735, -306, 27, 42, -18, 0, 1),
    ),
}  # fmt: skip


def e_n_long(n: int, alpha: Number) -> LongModel:
    alpha = Fraction(alpha)
    if n not in (5, 7, 9):
        raise ValueError(f"n must be 5, 7 or 9, got {n}")
    if delta_n(n, alpha) == 0:
        raise SingularCurveError(f"E{n}({alpha}) is singular")
    return tate(*_tate_params(n, alpha))


def e_n_with_point(n: int, alpha: Number) -> tuple[ShortModel, Point]:
    """Integral short model of E_n(alpha) and the image of the Tate point (0, 0)."""
    alpha = Fraction(alpha)
    long = e_n_long(n, alpha)
    A0, B0 = short_coefficients(long)
    pa, pb = E_N_SHORT_FORMS[n]
    assert (A0, B0) == (pa(alpha), pb(alpha)), f"E{n} coefficients differ from the closed form"
    iso = to_short(long)
    assert iso.short.discriminant == (iso.u / 6) ** 12 * delta_n(n, alpha)
    return iso.short, iso.map_point(Point(0, 0))


def e_n(n: int, alpha: Number) -> ShortModel:
    return e_n_with_point(n, alpha)[0]


# --- square discriminant: E^(1), E^(2), E_alt --------------------------------


def _xyz(p) -> tuple[int, int, int]:
    return forward_xyz(*p)


def _sq3_beta(variant: int, x: int, y: int, z: int) -> int:
    if variant == 1:
        return x * x + 5 * z**3
    if variant == 2:
        return 3 * y * y + 5 * z**3
    raise ValueError(f"variant must be 1 or 2, got {variant}")


def e_sq3_coefficients(variant: int, p) -> tuple[int, int]:
    """(A, B) of E^(variant)(a,b,c,d) without the nonsingularity check."""
    x, y, z = _xyz(p)
    return e3_coefficients(-z, _sq3_beta(variant, x, y, z))


def e_sq3(variant: int, p: FermatParams | tuple[int, int, int, int]) -> ShortModel:
    """E^(variant)(a,b,c,d): square discriminant and a rational 3-torsion point."""
    x, y, z = _xyz(p)
    if variant == 1:
        if x == 0 or y == 0:
            raise SingularCurveError(
                f"E1{tuple(p)}: {'x' if x == 0 else 'y'} = 0 makes the discriminant vanish"
            )
        E = e3(-z, x * x + 5 * z**3)
        assert E.discriminant == 2**4 * 3**6 * x**2 * y**6
    elif variant == 2:
        if x == 0 or y == 0:
            raise SingularCurveError(
                f"E2{tuple(p)}: {'x' if x == 0 else 'y'} = 0 makes the discriminant vanish"
            )
        E = e3(-z, 3 * y * y + 5 * z**3)
        assert E.discriminant == 2**4 * 3**4 * y**2 * x**6
    else:
        raise ValueError(f"variant must be 1 or 2, got {variant}")
    assert is_perfect_square(E.discriminant) is not None
    return E


def e_sq3_point(variant: int, p) -> Point:
    x, y, z = _xyz(p)
    return e3_point(-z, _sq3_beta(variant, x, y, z))


def e_alt(p: FermatParams | tuple[int, int, int, int]) -> ShortModel:
    """Y^2 = X^3 - 81 z X + 243 y for (x, y, z) the parametrized solution."""
    a, b, c, d = p
    n = c * c + c * d + d * d
    A = -(3**4) * n * (a * a + a * b + b * b)
    B = 3**5 * n * (a**3 * d + 3 * a * a * b * c + 3 * a * a * b * d + 3 * a * b * b * c - b**3 * d)
    x, y, z = _xyz(p)
    assert (A, B) == (-81 * z, 243 * y)
    if x == 0:
        raise SingularCurveError(f"E_alt{tuple(p)}: x = 0 makes the discriminant vanish")
    E = ShortModel(A, B)
    assert E.discriminant == 2**4 * 3**12 * x * x
    return E


def e_alt_params(E: ShortModel) -> FermatParams:
    """Parameters p with e_alt(p) isomorphic to E (u = 3)."""
    C = is_perfect_square(-(4 * E.A**3 + 27 * E.B**2))
    if C is None:
        raise ValueError("discriminant not a rational square")
    p = decompose((C, 3 * E.B, -E.A))
    assert is_isomorphic(E, e_alt(p)) is not None
    return p


# --- simplest cubic fields -------------------------------------------------


def simplest_cubic_poly(m: int) -> Poly:
    return X**3 + m * X * X - (m + 3) * X + 1


def simplest_cubic(m: int) -> ShortModel:
    """Short model of Y^2 = X^3 + mX^2 - (m+3)X + 1."""
    P = simplest_cubic_poly(m)
    assert poly_discriminant(P) == (m * m + 3 * m + 9) ** 2
    E = to_short(LongModel(0, m, 0, -(m + 3), 1)).short
    assert rational_is_square(E.discriminant) is not None
    return E


# --- obstruction curves D_5, D_7, D_9 -----------------------------------------


@dataclass(frozen=True)
class DCurve:
    n: int
    rhs: Poly


D_CURVES = {5: DCurve(5, _F5), 7: DCurve(7, _F7), 9: DCurve(9, _F9)}

_QR_FILTERS = {m: frozenset(i * i % m for i in range(m)) for m in (64, 63, 65, 11)}


def _maybe_square(n: int) -> bool:
    if n < 0:
        return False
    return all(n % m in qr for m, qr in _QR_FILTERS.items())


def _d_search_rows(args: tuple[tuple[int, ...], int, range]) -> list[tuple[Fraction, Fraction]]:
    coeffs, height, qs = args
    deg = len(coeffs) - 1
    out = []
    for q in qs:
        qpow = [q**k for k in range(deg + 1)]
        for p in range(-height, height + 1):
            if math.gcd(p, q) != 1:
                continue
            # q^(deg+1) f(p/q) = q * F(p, q) with F homogeneous of odd degree
            acc = 0
            for i in range(deg, -1, -1):
                acc = acc * p + coeffs[i] * qpow[deg - i]
            val = acc * q if deg % 2 else acc
            if not _maybe_square(val):
                continue
            r = is_perfect_square(val)
            if r is not None:
                out.append((Fraction(p, q), Fraction(r, q ** ((deg + 1) // 2))))
    return out


def d_search(n: int, height: int, workers: int = 1) -> list[tuple[Fraction, Fraction]]:
    """Affine points (alpha, z), z >= 0, of D_n with naive height of alpha at most ``height``."""
    if height < 1:
        raise ValueError("height must be >= 1")
    rhs = D_CURVES[n].rhs
    coeffs = tuple(int(c) for c in rhs.coeffs)
    if workers <= 1:
        found = _d_search_rows((coeffs, height, range(1, height + 1)))
    else:
        chunks = [(coeffs, height, range(1 + k, height + 1, workers)) for k in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            found = [pt for part in pool.map(_d_search_rows, chunks) for pt in part]
    return sorted(found)


# --- the quotient D_9 -> E_9 ---------------------------------------------------


def quotient_map_checks() -> dict[str, bool]:
    """Exact identities behind the degree-3 quotient of D_9 onto v^2 = u^3 - 27."""
    a = X
    u_num = a**3 - 3 * a * a + 1
    u = RatFunc(u_num, a * (a - 1))
    w = RatFunc(a * a - a + 1, a * a * (a - 1) ** 2)  # v = z * w
    sigma = RatFunc(Poly.const(1), 1 - a)
    v_sq = w * w * _F9  # z^2 replaced by f_9

    checks = {
        "cleared_identity": u_num**3 - 27 * a**3 * (a - 1) ** 3
        == (a * a - a + 1) ** 3 * (a**3 - 6 * a * a + 3 * a + 1),
        "lands_on_E9": v_sq == u**3 - 27,
        "automorphism_order_3": sigma(sigma(sigma)) == RatFunc(a) and sigma(sigma) != RatFunc(a),
        "automorphism_preserves_D9": RatFunc(_F9)(sigma) == RatFunc(_F9, (1 - a) ** 8),
        "u_invariant": u(sigma) == u,
        # z -> z/(1-a)^4 under the automorphism
        "v_invariant": w(sigma) == w * RatFunc((1 - a) ** 4),
    }
    return checks


def verify_quotient_map() -> bool:
    return all(quotient_map_checks().values())


def quotient_two_torsion_preimages() -> list[Fraction]:
    """Rational alpha with u(alpha) = 3, i.e. roots of a^3 - 6a^2 + 3a + 1."""
    return rational_roots(X**3 - 6 * X * X + 3 * X + 1)
