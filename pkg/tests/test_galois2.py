from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from mod2tors.curvefile import load_fixture
from mod2tors.curves import LongModel, ShortModel, SingularCurveError
from mod2tors.families import e_alt
from mod2tors.fermat import forward_xyz
from mod2tors.galois2 import (
    Mod2Image,
    discriminant_is_square,
    in_S2,
    in_S3,
    mod2_image,
    sqrt_discriminant,
    three_torsion_witness,
    two_torsion_order,
)
from mod2tors.torsion import torsion_subgroup


@pytest.mark.parametrize("AB, order", [((-1, 0), 4), ((0, 1), 2), ((0, 2), 1), ((-81, 0), 4)])
def test_two_torsion_order(AB, order):
    assert two_torsion_order(ShortModel(*AB)) == order


@pytest.mark.parametrize(
    "AB, image, root",
    [
        ((-1, 0), Mod2Image.Id, 8),
        ((0, 1), Mod2Image.C2, None),
        ((0, 2), Mod2Image.S3, None),
        ((-81, 243), Mod2Image.C3, 2916),
    ],
)
def test_worked_examples(AB, image, root):
    E = ShortModel(*AB)
    assert mod2_image(E) is image
    assert sqrt_discriminant(E) == root


def test_long_model_input():
    assert mod2_image(LongModel(0, 0, 0, -1, 0)) is Mod2Image.Id
    assert mod2_image(LongModel(0, -1, -1, 0, 0)) is Mod2Image.S3


curves = st.tuples(st.integers(-60, 60), st.integers(-60, 60)).filter(
    lambda ab: 4 * ab[0] ** 3 + 27 * ab[1] ** 2 != 0
)


@given(curves, st.sampled_from([1, -1, 2, -2, 3, -3, Fraction(1, 2), Fraction(-1, 2)]))
def test_image_is_twist_invariant(AB, u):
    E = ShortModel(*AB)
    F = E.twist(2)  # so that twisting by halves stays integral
    assert mod2_image(F.twist(u)) == mod2_image(F) == mod2_image(E)


@given(st.integers(-30, 30), st.integers(-30, 30))
def test_rational_two_torsion_forces_square_pattern(r, s):
    # Y^2 = (X - r)(X^2 + rX + s)
    A, B = s - r * r, -r * s
    assume(4 * A**3 + 27 * B**2 != 0)
    E = ShortModel(A, B)
    k = two_torsion_order(E)
    assert k in (2, 4)
    assert discriminant_is_square(E) == (k == 4)


@pytest.mark.parametrize("fixture", ["examples.curves", "table_rows.curves"])
def test_two_torsion_pattern_on_fixtures(fixture):
    for rec in load_fixture(fixture):
        k = two_torsion_order(rec.model)
        if k == 2:
            assert not discriminant_is_square(rec.model)
        if k == 4:
            assert discriminant_is_square(rec.model)


def test_S2_S3_examples():
    assert in_S2((1, 0, 1, 0))
    assert not in_S3((1, 0, 0, 1))
    assert not in_S2((1, 0, 0, 1))
    with pytest.raises(SingularCurveError):
        in_S2((0, 0, 1, 0))


def test_three_torsion_witness():
    assert three_torsion_witness(ShortModel(0, 1)).x == 0
    assert three_torsion_witness(ShortModel(-81, 243)).is_infinity


@given(st.tuples(*[st.integers(-5, 5)] * 4))
def test_S2_S3_against_torsion(p):
    assume(forward_xyz(*p)[0] != 0)
    T = torsion_subgroup(e_alt(p))
    s2, s3 = in_S2(p), in_S3(p)
    if not s2 and not s3:
        assert T.shape == "C1"
    if s3:
        assert T.order % 3 == 0
    assert s2 == (not T.is_cyclic)
