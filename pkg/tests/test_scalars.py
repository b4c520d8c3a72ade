from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from fockjack import model
from fockjack.errors import DiscriminantMismatch, DivisionByZero, NotAUnit, PoleAtKappa
from fockjack.scalars import EpsSeries, KappaFunction, QuadScalar, scalar_from_json, scalar_to_json

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
D = Fraction(3)
quads = st.builds(lambda a, b: QuadScalar(a, b, D), rationals, rationals)
small_polys = st.lists(st.integers(-4, 4), min_size=1, max_size=4)
kappa_fns = st.builds(
    lambda n, d: KappaFunction(n, d),
    small_polys,
    small_polys.filter(lambda c: any(c)),
)


def test_alpha_product_is_minus_two():
    m = model(2, 3)
    assert m.alpha_plus * m.alpha_minus == -2
    assert (m.alpha_plus * m.alpha_minus).is_rational()


def test_inverse_of_sqrt3_is_rationalized():
    inv = QuadScalar.sqrt(3).inv()
    assert inv == QuadScalar(0, Fraction(1, 3), 3)


def test_perfect_square_discriminant_folds_into_rationals():
    x = QuadScalar(1, 2, 9)
    assert x.is_rational() and x.to_rational() == 7


def test_mixed_discriminants_rejected():
    with pytest.raises(DiscriminantMismatch):
        QuadScalar(0, 1, 3) + QuadScalar(0, 1, 5)


def test_zero_quad_not_invertible():
    with pytest.raises(DivisionByZero):
        QuadScalar(0, 0, 3).inv()


@given(quads)
def test_quad_identity(x):
    assert QuadScalar(1, 0, D) * x == x


@given(quads, quads, quads)
def test_quad_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x


@given(quads)
def test_quad_inverse(x):
    assume(x != 0)
    assert x * x.inv() == 1


def test_kappa_canonical_form():
    k = KappaFunction.kappa()
    assert (k * k - 1) / (k + 1) == k - 1


def test_kappa_specialize_value():
    k = KappaFunction.kappa()
    assert (2 * k / (k + 1)).specialize(Fraction(2, 3)) == Fraction(4, 5)


def test_kappa_pole_reported():
    k = KappaFunction.kappa()
    with pytest.raises(PoleAtKappa):
        (1 / (k - 1)).specialize(1)


@given(kappa_fns, kappa_fns, kappa_fns)
def test_kappa_field_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    if f != 0:
        assert f * f.inv() == 1


@given(kappa_fns, kappa_fns, st.fractions(min_value=Fraction(1, 7), max_value=7, max_denominator=7))
def test_specialization_is_a_ring_map(f, g, k0):
    try:
        fv, gv = f.specialize(k0), g.specialize(k0)
    except PoleAtKappa:
        return
    assert (f + g).specialize(k0) == fv + gv
    assert (f * g).specialize(k0) == fv * gv


def test_eps_geometric_inverse():
    e = EpsSeries.eps(3)
    assert (1 + e).inv() == EpsSeries([1, -1, 1], 3)


def test_eps_truncated_product():
    assert EpsSeries([1, 1], 2) * EpsSeries([1, -1], 2) == EpsSeries([1], 2)


def test_eps_nonunit():
    with pytest.raises(NotAUnit):
        EpsSeries.eps(3).inv()


@given(st.lists(rationals, min_size=4, max_size=4), st.lists(rationals, min_size=4, max_size=4))
def test_eps_units_closed(a, b):
    x, y = EpsSeries(a, 4), EpsSeries(b, 4)
    assert x.is_unit() == (a[0] != 0)
    if x.is_unit() and y.is_unit():
        assert (x * y).is_unit()
        assert x * x.inv() == EpsSeries.constant(1, 4)


@pytest.mark.parametrize(
    "value",
    [Fraction(3, 7), QuadScalar(1, Fraction(-2, 3), 3), KappaFunction([1, 2], [0, 1]), EpsSeries([1, 2, 3], 3)],
)
def test_json_round_trip(value):
    assert scalar_from_json(scalar_to_json(value)) == value
