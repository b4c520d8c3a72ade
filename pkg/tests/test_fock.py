from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fockjack import model, weight
from fockjack.errors import BadConstantTerm, NotCoprime, OutOfRange, SizeGuardExceeded, ZeroFirstOrder
from fockjack.fock import (
    FockElement,
    contragredient_pairing,
    deform,
    heisenberg_apply,
    l0_eigenvalue,
    raw_weight,
    rho_gamma,
    singular_space,
    virasoro_apply,
)
from fockjack.partitions import Partition, enumerate_partitions
from fockjack.scalars import EpsSeries, QuadScalar
from fockjack.symfun import SymPoly

MODELS = [(2, 3), (2, 5), (3, 4)]
models = st.sampled_from(MODELS).map(lambda pq: model(*pq))
small_parts = st.lists(st.integers(1, 3), max_size=3).map(Partition.from_parts)
coefs = st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(bool)


@st.composite
def fock_vectors(draw, max_terms=3):
    m = draw(models)
    r, s = draw(st.integers(-3, 3)), draw(st.integers(-3, 3))
    w = weight(m, r, s)
    terms = draw(st.dictionaries(small_parts, coefs, min_size=1, max_size=max_terms))
    return FockElement(w, terms)


def _mono(w, *parts):
    return FockElement(w, {Partition(parts): 1})


@pytest.mark.parametrize("pq, c", [((2, 3), 0), ((2, 5), Fraction(-22, 5)), ((3, 4), Fraction(1, 2))])
def test_central_charge(pq, c):
    assert model(*pq).c == c


@pytest.mark.parametrize("pq", MODELS)
def test_model_invariants(pq):
    m = model(*pq)
    pp, pm = pq
    assert m.alpha_plus * m.alpha_minus == -2
    assert m.alpha_plus * m.alpha_plus / 2 == Fraction(pm, pp) == m.kappa_plus
    assert m.alpha_minus * m.alpha_minus / 2 == Fraction(pp, pm) == m.kappa_minus
    assert m.alpha == -pm * m.alpha_minus
    assert m.alpha == pp * m.alpha_plus
    assert m.alpha0 == m.alpha_plus + m.alpha_minus


def test_model_validation():
    with pytest.raises(NotCoprime):
        model(2, 4)
    with pytest.raises(OutOfRange):
        model(1, 3)


def test_weight_examples():
    assert model(2, 5).h(1, 2) == Fraction(-1, 5)
    assert weight(model(3, 4), 1, 1).h == 0
    assert model(2, 3).h(1, 1, -1) == 2


@pytest.mark.parametrize("pq", MODELS)
def test_closed_h_matches_beta_formula(pq):
    m = model(*pq)
    for r in range(-6, 7):
        for s in range(-6, 7):
            assert weight(m, r, s).h == m.h(r, s)
            assert m.h(r, s) + r * s == m.h(-r, s) == m.h(r, -s)
            for n in (-1, 1):
                assert weight(m, r, s, n).beta == weight(m, r - n * m.p_plus, s).beta


def test_heisenberg_examples():
    w = weight(model(2, 3), 2, 1)
    assert heisenberg_apply(_mono(w, 1), 1) == FockElement.vacuum(w)
    assert heisenberg_apply(FockElement.vacuum(w), 0) == FockElement.vacuum(w) * w.beta
    assert heisenberg_apply(FockElement.vacuum(w), 2).is_zero()


def test_virasoro_examples():
    m = model(2, 3)
    w = weight(m, 2, 3)
    vac = FockElement.vacuum(w)
    assert virasoro_apply(vac, 0) == vac * w.h
    assert virasoro_apply(_mono(w, 1), 1) == vac * (w.beta - m.alpha0)
    assert virasoro_apply(FockElement.vacuum(weight(m, 1, 1)), -1).is_zero()


def test_rho_gamma_examples():
    w = weight(model(2, 5), 1, 2)
    g = Fraction(5, 3)
    assert rho_gamma(SymPoly.p(2), g, w) == _mono(w, 2) * g
    assert rho_gamma(SymPoly.p(1, 1), g, w) == _mono(w, 1, 1) * g**2
    want = _mono(w, 1, 1) * (g * g / 2) - _mono(w, 2) * (g / 2)
    assert rho_gamma(SymPoly.m(1, 1), g, w) == want


def test_singular_space_examples():
    m = model(2, 3)
    w = weight(m, -1, -1)
    assert w.beta == m.alpha0
    assert singular_space(m, w, 1) == [_mono(w, 1)]
    assert singular_space(m, raw_weight(m, Fraction(1, 7)), 1) == []
    assert singular_space(m, w, 0) == [FockElement.vacuum(w)]
    with pytest.raises(SizeGuardExceeded):
        singular_space(m, w, 13)


def test_grade_dimensions():
    # monomials reachable by creation modes from the vacuum
    w = weight(model(2, 3), 1, 1)
    grades = {0: {Partition()}}
    for n in range(1, 11):
        grades[n] = set()
        for k in range(1, n + 1):
            for lam in grades[n - k]:
                grades[n] |= set(heisenberg_apply(FockElement(w, {lam: 1}), -k).terms)
        assert len(grades[n]) == len(enumerate_partitions(n))


@given(fock_vectors(), st.integers(-3, 3), st.integers(-3, 3))
def test_virasoro_bracket(v, a, b):
    m = v.model
    lhs = virasoro_apply(virasoro_apply(v, b), a) - virasoro_apply(virasoro_apply(v, a), b)
    rhs = virasoro_apply(v, a + b) * (a - b)
    if a + b == 0:
        rhs = rhs + v * (m.c * Fraction(a**3 - a, 12))
    assert lhs == rhs


@given(fock_vectors(), st.integers(-3, 3), st.integers(-3, 3))
def test_mode_bracket(v, n, k):
    m = v.model
    lhs = virasoro_apply(heisenberg_apply(v, k), n) - heisenberg_apply(virasoro_apply(v, n), k)
    rhs = heisenberg_apply(v, n + k) * (-k)
    if n + k == 0:
        rhs = rhs - v * (m.alpha0 * Fraction(n * (n + 1), 2))
    assert lhs == rhs


@given(fock_vectors(max_terms=1))
def test_monomials_are_l0_eigenvectors(v):
    lam = next(iter(v.terms))
    assert l0_eigenvalue(v) == v.weight.h + lam.size


@pytest.mark.parametrize("pq", MODELS)
def test_contragredient_labels(pq):
    m = model(*pq)
    for label in [(1, 2, 0), (2, -1, 1), (-3, 1, -2)]:
        w = weight(m, *label)
        assert w.dual().label == tuple(-x for x in label)
        assert w.dual().beta == weight(m, *w.dual().label).beta
        assert w.dual().dual().beta == w.beta


@pytest.mark.parametrize("pq", MODELS)
def test_pairing_makes_l_n_adjoint_to_l_minus_n(pq):
    m = model(*pq)
    w = weight(m, 2, 1)
    dual = w.dual()
    for n in range(-3, 4):
        for d in range(0, 5):
            if not 0 <= d - n <= 4:
                continue
            for lam in enumerate_partitions(d):
                for mu in enumerate_partitions(d - n):
                    u = FockElement(w, {lam: 1})
                    phi = FockElement(dual, {mu: 1})
                    left = contragredient_pairing(phi, virasoro_apply(u, n))
                    right = contragredient_pairing(virasoro_apply(phi, -n), u)
                    assert left == right


def test_deformation_examples():
    m = model(2, 3)
    a = m.alpha_plus
    dm = deform(m, EpsSeries([a, a, 0], 3))
    assert dm.alpha_minus == EpsSeries([-2 / a, 2 / a, -2 / a], 3)
    assert dm.alpha_plus * dm.alpha_minus == EpsSeries.constant(-2, 3)
    assert all(c == 0 for c in (dm.h_eps(1, 1)[i] for i in range(3)))
    assert dm.kappa_minus.constant_term == Fraction(2, 3)


def test_deformation_validation():
    m = model(2, 3)
    with pytest.raises(BadConstantTerm):
        deform(m, EpsSeries([1, 1], 3))
    with pytest.raises(ZeroFirstOrder):
        deform(m, EpsSeries([m.alpha_plus, 0, 1], 3))


@given(models, st.integers(-6, 6), st.integers(-6, 6), st.integers(1, 3))
def test_deformed_h_shift(m, r, s, a1):
    dm = deform(m, EpsSeries([m.alpha_plus, m.alpha_plus * a1], 4))
    assert dm.h_eps(r, s) + r * s == dm.h_eps(-r, s) == dm.h_eps(r, -s)
    assert dm.h_of_beta(dm.beta_eps(r, s)) == dm.h_eps(r, s)
    assert dm.h_eps(r, s).constant_term == m.h(r, s)
