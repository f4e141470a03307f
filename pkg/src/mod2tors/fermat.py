"""Integer solutions of x^2 + 3y^2 = 4z^3.

Every solution comes from four integers (a, b, c, d) through

    x + y*sqrt(-3) = 2 * (a + b*rho)^3 * (c + d*rho) * (c^2 + c*d + d^2),

which is :func:`param_forward` written out in coordinates.  The inverse
direction (:func:`decompose`) factors ``(x + y*sqrt(-3))/2`` in Z[rho] and
splits the prime exponents between the cube part and the norm part.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass

from .algebra import is_perfect_square
from .eisenstein import ONE, UNITS, EisInt, eis_factor, unit_index


class NotOnSurfaceError(ValueError):
    pass


class DecompositionError(ArithmeticError):
    pass


@dataclass(frozen=True, order=True)
class FermatParams:
    a: int
    b: int
    c: int
    d: int

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d))


@dataclass(frozen=True, order=True)
class FermatSolution:
    x: int
    y: int
    z: int

    def __post_init__(self):
        if self.x**2 + 3 * self.y**2 != 4 * self.z**3:
            raise NotOnSurfaceError(f"{(self.x, self.y, self.z)} is not on the surface")

    def __iter__(self):
        return iter((self.x, self.y, self.z))


def forward_xyz(a: int, b: int, c: int, d: int) -> tuple[int, int, int]:
    """The parametrization without the on-surface check."""
    n = c * c + c * d + d * d
    x = n * (3 * a * a * b * (c - d) + a**3 * (2 * c + d) - b**3 * (2 * c + d) - 3 * a * b * b * (c + 2 * d))
    y = n * (3 * a * b * b * c + a**3 * d - b**3 * d + 3 * a * a * b * (c + d))
    z = n * (a * a + a * b + b * b)
    return x, y, z


def param_forward(p: FermatParams | tuple[int, int, int, int]) -> FermatSolution:
    return FermatSolution(*forward_xyz(*p))


def enumerate_solutions(z_max: int) -> list[FermatSolution]:
    """All integer solutions with 0 <= z <= z_max, signs included."""
    if z_max < 0:
        raise ValueError("z_max must be >= 0")
    out = []
    for z in range(z_max + 1):
        four_z3 = 4 * z**3
        y = 0
        while 3 * y * y <= four_z3:
            r = is_perfect_square(four_z3 - 3 * y * y)
            if r is not None:
                for sx in {r, -r}:
                    for sy in {y, -y}:
                        out.append(FermatSolution(sx, sy, z))
            y += 1
    return sorted(out)


def _split_exponents(e1: int, e2: int) -> tuple[int, int, int, int]:
    """Exponents (k1, k2, j1, j2) with 3*k1 + 2*j1 + j2 = e1 and 3*k2 + 2*j2 + j1 = e2.

    k counts the prime in the cube factor, j in the norm-part factor gamma
    (which enters as gamma^2 * conj(gamma)).
    """
    for j1, j2 in itertools.product(range(3), repeat=2):
        r1 = e1 - 2 * j1 - j2
        r2 = e2 - 2 * j2 - j1
        if r1 >= 0 and r2 >= 0 and r1 % 3 == 0 and r2 % 3 == 0:
            return r1 // 3, r2 // 3, j1, j2
    raise DecompositionError(f"exponent pair ({e1}, {e2}) has no split")


def _constructive_split(nu: EisInt) -> tuple[EisInt, EisInt]:
    """beta, gamma with nu == beta^3 * gamma^2 * conj(gamma)."""
    fac = eis_factor(nu)
    by_norm: dict[int, list[tuple[EisInt, int]]] = defaultdict(list)
    for p, e in fac.factors:
        by_norm[p.norm()].append((p, e))

    beta, gamma = ONE, ONE
    for n, group in by_norm.items():
        if len(group) == 1 and (n == 3 or group[0][0].b == 0):
            # ramified 1+rho or an inert rational prime: exponent is 0 mod 3
            p, e = group[0]
            if e % 3:
                raise DecompositionError(f"exponent {e} of {p} is not a multiple of 3")
            beta = beta * p ** (e // 3)
            continue
        pi = group[0][0]
        pibar = pi.conj().canonical()
        exps = {p: e for p, e in group}
        e1, e2 = exps.get(pi, 0), exps.get(pibar, 0)
        k1, k2, j1, j2 = _split_exponents(e1, e2)
        beta = beta * pi**k1 * pibar**k2
        gamma = gamma * pi**j1 * pibar**j2

    unit = nu.exact_div(beta**3 * gamma * gamma * gamma.conj())
    # rho^m * gamma scales gamma^2 * conj(gamma) by rho^m.
    gamma = UNITS[unit_index(unit)] * gamma
    return beta, gamma


def decompose(s: FermatSolution | tuple[int, int, int]) -> FermatParams:
    """Parameters (a, b, c, d) whose forward image is exactly ``s``."""
    if not isinstance(s, FermatSolution):
        s = FermatSolution(*s)
    x, y, z = s.x, s.y, s.z
    if x == 0 and y == 0:
        return FermatParams(0, 0, 1, 0)
    # x = y (mod 2) on the surface, so (x + y*sqrt(-3))/2 lies in Z[rho].
    nu = EisInt((x - y) // 2, y)
    beta, gamma = _constructive_split(nu)
    params = FermatParams(beta.a, beta.b, gamma.a, gamma.b)
    if forward_xyz(*params) == (x, y, z):
        return params
    # Fallback: the unit placement is the only freedom left.
    for u, v in itertools.product(UNITS, repeat=2):
        bu, gv = u * beta, v * gamma
        cand = FermatParams(bu.a, bu.b, gv.a, gv.b)
        if forward_xyz(*cand) == (x, y, z):
            return cand
    raise DecompositionError(f"decomposition failed for {(x, y, z)}")
