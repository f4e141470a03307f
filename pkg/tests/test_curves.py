from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mod2tors.algebra import rational_is_square, rational_roots
from mod2tors.curvefile import load_fixture
from mod2tors.curves import (
    INFINITY,
    LongModel,
    OffCurveError,
    Point,
    ShortModel,
    SingularCurveError,
    add,
    discriminant,
    division_polynomial,
    exact_order_factor,
    is_isomorphic,
    long_to_short,
    mul,
    short_discriminant,
    to_short,
)
from mod2tors.families import tate


@pytest.mark.parametrize("A, B, d", [(-1, 0, 64), (0, 1, -432), (0, 0, 0)])
def test_short_discriminant(A, B, d):
    assert short_discriminant(A, B) == d


def test_singular_models_rejected():
    with pytest.raises(SingularCurveError):
        ShortModel(0, 0)
    with pytest.raises(SingularCurveError):
        LongModel(1, -1, 0, 0, 0)  # node at the origin
    with pytest.raises(ValueError):
        ShortModel(Fraction(1, 2), 1)


def test_long_invariants_of_tate_1_1():
    E = tate(1, 1)
    assert E.ainvs == (0, -1, -1, 0, 0)
    assert (E.c4, E.c6) == (16, -152)
    assert E.discriminant == -11
    assert E.j_invariant == Fraction(-4096, 11)


def test_long_to_short_tate_1_1():
    S = long_to_short(tate(1, 1))
    assert (S.A, S.B) == (-432, 8208)
    assert S.discriminant == 6**12 * discriminant(tate(1, 1))
    assert S.j_invariant == tate(1, 1).j_invariant


def test_long_to_short_clears_denominators():
    iso = to_short(LongModel(0, 0, 0, Fraction(1, 3), Fraction(-2, 5)))
    assert iso.short.discriminant == iso.u**12 * iso.long.discriminant
    assert iso.u % 6 == 0


@given(st.tuples(*[st.fractions(-20, 20, max_denominator=9)] * 5))
def test_long_to_short_scaling_law(a):
    try:
        E = LongModel(*a)
    except SingularCurveError:
        return
    iso = to_short(E)
    assert iso.short.discriminant == iso.u**12 * E.discriminant
    assert iso.short.j_invariant == E.j_invariant


def test_short_to_short_u_is_power_of_six():
    iso = to_short(ShortModel(-1, 0).to_long())
    assert iso.u == 6
    assert is_isomorphic(ShortModel(-1, 0), iso.short) is not None


@pytest.mark.parametrize(
    "E1, E2, u",
    [
        ((-1, 0), (-16, 0), 2),
        ((2, 3), (2, 3), 1),
        ((0, 1), (0, 2), None),
        ((0, 1), (0, 64), 2),
        ((-1, 0), (-1, 1), None),
    ],
)
def test_is_isomorphic_examples(E1, E2, u):
    assert is_isomorphic(ShortModel(*E1), ShortModel(*E2)) == u


@given(
    st.sampled_from([(-1, 0), (0, 1), (2, 3), (-81, 243)]),
    st.sampled_from([1, 2, 3, Fraction(1, 1), 6]),
    st.sampled_from([1, 2, 5]),
)
def test_is_isomorphic_equivalence(AB, u, v):
    E = ShortModel(*AB)
    F, G = E.twist(u), E.twist(u).twist(v)
    assert is_isomorphic(E, F) == abs(u)
    assert is_isomorphic(F, E) == 1 / Fraction(abs(u))
    assert is_isomorphic(E, G) == abs(u * v)


# --- group law ----------------------------------------------------------------


def test_group_law_examples():
    E = ShortModel(0, 1)
    assert add(E, Point(-1, 0), Point(-1, 0)) == INFINITY
    assert add(E, Point(2, 3), INFINITY) == Point(2, 3)
    assert E.order(Point(2, 3)) == 6
    assert mul(tate(1, 1), 5, Point(0, 0)) == INFINITY
    assert tate(1, 1).order(Point(0, 0)) == 5
    with pytest.raises(OffCurveError):
        add(E, Point(1, 1), INFINITY)


def test_group_law_associative_on_rank_one_curve():
    E = ShortModel(-2, 1)  # (1, 0), (0, 1), ... lots of rational points
    P, Q = Point(0, 1), Point(1, 0)
    pts = [mul(E, k, P) for k in range(1, 4)] + [Q, add(E, P, Q)]
    for a in pts:
        for b in pts:
            for c in pts:
                assert add(E, add(E, a, b), c) == add(E, a, add(E, b, c))
                assert E.contains(add(E, a, b))


def test_mul_matches_repeated_addition():
    E = ShortModel(-2, 1)
    P = Point(0, 1)
    acc = INFINITY
    for n in range(21):
        assert mul(E, n, P) == acc
        acc = add(E, acc, P)
    assert mul(E, -3, P) == E.neg(mul(E, 3, P))


def test_long_model_group_law_matches_short():
    L = LongModel(1, -3, -3, 0, 0)
    iso = to_short(L)
    P = Point(0, 0)
    for k in range(1, 5):
        assert iso.map_point(mul(L, k, P)) == mul(iso.short, k, iso.map_point(P))


# --- division polynomials ------------------------------------------------------


def test_division_polynomial_conventions():
    E = ShortModel(0, 1)
    assert division_polynomial(E, 2).coeffs == (1, 0, 0, 1)
    assert division_polynomial(E, 3).coeffs == (0, 12, 0, 0, 3)
    F = ShortModel(-81, 243)
    assert division_polynomial(F, 3).coeffs == (-6561, 2916, -486, 0, 3)
    for n in (1, 13):
        with pytest.raises(ValueError):
            division_polynomial(E, n)


def _points_by_mul(E, n):
    """x-coordinates of points of exact order n found from the torsion points of the fixtures."""
    from mod2tors.torsion import torsion_points

    return sorted({P.x for P, k in torsion_points(E).items() if k == n})


@pytest.mark.parametrize("fixture", ["examples.curves", "table_rows.curves"])
def test_exact_order_factors_match_point_orders(fixture):
    for rec in load_fixture(fixture):
        E = rec.short
        for n in range(2, 13):
            f = E.rhs if n == 2 else exact_order_factor(E, n)
            xs = [x for x in rational_roots(f) if rational_is_square(E.rhs(x)) is not None]
            for x in xs:
                y = rational_is_square(E.rhs(x))
                assert E.order(Point(x, y), n) == n
            if n in (2, 3, 4, 5, 7, 8, 9):
                assert xs == _points_by_mul(E, n), (rec.name, n)


def test_division_polynomial_roots_are_torsion_x():
    E = ShortModel(0, 1)
    for n in range(2, 13):
        roots = rational_roots(division_polynomial(E, n))
        for x in roots:
            y = rational_is_square(E.rhs(x))
            if y is not None:
                assert n % E.order(Point(x, y), n) == 0
