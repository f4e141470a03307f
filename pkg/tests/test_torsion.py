import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from oracles import lutz_nagell_torsion, reduce_model, short_model_of

from mod2tors.curvefile import load_fixture
from mod2tors.curves import INFINITY, Point, ShortModel
from mod2tors.torsion import (
    MAZUR_SHAPES,
    BadPrimeError,
    _generated,
    count_points_mod_p,
    torsion_bound,
    torsion_subgroup,
)


def _brute_count(A, B, p):
    return 1 + sum(1 for x in range(p) for y in range(p) if (y * y - x**3 - A * x - B) % p == 0)


@pytest.mark.parametrize("AB, p, n", [((0, 1), 5, 6), ((-1, 0), 5, 8)])
def test_count_points_examples(AB, p, n):
    assert count_points_mod_p(ShortModel(*AB), p) == n


@given(st.integers(-20, 20), st.integers(-20, 20), st.sampled_from([3, 5, 7, 11, 13, 17, 19, 23]))
def test_count_points_brute(A, B, p):
    assume(4 * A**3 + 27 * B**2 != 0)
    E = ShortModel(A, B)
    assume(E.discriminant % p)
    assert count_points_mod_p(E, p) == _brute_count(A, B, p)


def test_bad_prime_rejected():
    with pytest.raises(BadPrimeError):
        count_points_mod_p(ShortModel(0, 1), 3)
    with pytest.raises(BadPrimeError):
        count_points_mod_p(ShortModel(0, 1), 2)


def test_bound():
    assert torsion_bound(ShortModel(0, 1)) % 6 == 0
    assert torsion_bound(ShortModel(0, 2)) >= 1


@pytest.mark.parametrize(
    "AB, shape",
    [
        ((0, 1), "C6"),
        ((-81, 0), "C2xC2"),
        ((0, -27), "C2"),
        ((0, 2), "C1"),
        ((-81, 243), "C1"),
        ((-1, 0), "C2xC2"),
        ((0, 16), "C3"),
    ],
)
def test_torsion_examples(AB, shape):
    T = torsion_subgroup(ShortModel(*AB))
    assert T.shape == shape


def test_c6_generator():
    T = torsion_subgroup(ShortModel(0, 1))
    assert len(T.generators) == 1
    assert ShortModel(0, 1).order(T.generators[0]) == 6
    assert T.generators[0] in {Point(2, 3), Point(2, -3)}


def _all_fixtures():
    for name in ("examples.curves", "table_rows.curves"):
        yield from load_fixture(name)


@pytest.mark.parametrize("rec", list(_all_fixtures()), ids=lambda r: r.name)
def test_agrees_with_lutz_nagell(rec):
    A, B = reduce_model(*short_model_of(*rec.a_invariants))
    shape, _ = lutz_nagell_torsion(A, B)
    assert torsion_subgroup(ShortModel(A, B)).shape == shape
    assert torsion_subgroup(rec.model).shape == shape


@given(st.integers(-200, 200), st.integers(-200, 200))
def test_agrees_with_lutz_nagell_random(A, B):
    assume(4 * A**3 + 27 * B**2 != 0)
    E = ShortModel(A, B)
    T = torsion_subgroup(E)
    assert T.shape == lutz_nagell_torsion(A, B)[0]
    assert T.shape in MAZUR_SHAPES
    assert torsion_bound(E) % T.order == 0
    assert len(_generated(E, T.generators)) == T.order


def test_group_invariants_on_fixtures():
    for rec in _all_fixtures():
        E = rec.short
        T = torsion_subgroup(E)
        assert len(T.generators) == (0 if T.order == 1 else 1 if T.is_cyclic else 2)
        if T.is_cyclic and T.generators:
            assert E.order(T.generators[0], 12) == T.order
        if not T.is_cyclic:
            assert E.order(T.generators[1]) == 2
        assert INFINITY in _generated(E, T.generators)
