from fractions import Fraction

import pytest

from fockjack import model
from fockjack.errors import DegreeGuardExceeded, NotSymmetric, OutOfRange
from fockjack.screening import delta_n, extended_weight
from fockjack.walgebra import (
    COMMUTATORS,
    PRODUCT_TABLE,
    BetaPoly,
    HPoly,
    census_count,
    expected_roots,
    flip,
    g_polys,
    kac_table,
    omega_closed,
    omega_poly,
    rep_check,
    root_multiset,
    simple_census,
    to_h_poly,
    zhu_multiply,
    zhu_table,
)

MODELS = [(2, 3), (2, 5), (3, 4)]


@pytest.mark.parametrize(
    "pq, deltas",
    [((2, 3), [0]), ((2, 5), [0, Fraction(-1, 5)]), ((3, 4), [0, Fraction(1, 16), Fraction(1, 2)])],
)
def test_kac_table(pq, deltas):
    t = kac_table(model(*pq))
    pp, pm = pq
    assert len(t.classes) == (pp - 1) * (pm - 1) // 2
    assert sorted(c.delta for c in t.classes) == sorted(deltas)
    for c in t.classes:
        for r, s in c.reps:
            assert model(*pq).h(r, s) == c.delta


def test_kac_json():
    assert kac_table(model(2, 5)).to_json() == {"classes": [{"rs": [1, 1], "delta": "0"}, {"rs": [1, 2], "delta": "-1/5"}]}


def test_omega_zero_at_23():
    m = model(2, 3)
    res = omega_poly(m, 0)
    assert res.certificate().passed
    beta = BetaPoly([0, 1])
    assert res.poly == (beta * (beta - m.alpha0)) * Fraction(3, 2)
    assert to_h_poly(res.poly, m) == HPoly([0, 3])


@pytest.mark.parametrize("pq", MODELS)
def test_omega_two_routes_and_roots(pq):
    m = model(*pq)
    for n in (0, 1):
        res = omega_poly(m, n)
        assert res.certificate().passed, n
        assert res.poly.degree == delta_n(m, n)
        assert res.poly(m.beta(1, 1)) == 0


@pytest.mark.parametrize("pq", MODELS)
def test_omega_flip(pq):
    # the grid of roots is flip symmetric, so omega_n is even or odd with parity Delta_n
    m = model(*pq)
    for n in range(3):
        w = omega_closed(m, n)
        assert flip(w, m.alpha0) == w * (-1) ** delta_n(m, n)


def test_omega_guard():
    with pytest.raises(DegreeGuardExceeded):
        omega_poly(model(2, 3), 3)


def test_h_conversion():
    m = model(2, 5)
    beta = BetaPoly([0, 1])
    assert to_h_poly(beta * (beta - m.alpha0), m) == HPoly([0, 2])
    assert to_h_poly(BetaPoly([1]), m) == HPoly([1])
    with pytest.raises(NotSymmetric):
        to_h_poly(beta, m)


def test_g_degrees_at_23():
    g0, g1, g2 = g_polys(model(2, 3))
    assert g0 == HPoly([0, 3])
    assert (g1.degree, g2.degree) == (15, 20)


@pytest.mark.parametrize("pq, degrees", [((2, 3), (1, 15, 20)), ((2, 5), (2, 27, 35)), ((3, 4), (3, 35, 44))])
def test_g_root_patterns(pq, degrees):
    m = model(*pq)
    gs = g_polys(m, strict=False)
    assert tuple(g.degree for g in gs) == degrees
    for i, (g, cert) in enumerate(zip(gs, gs.certificates)):
        assert cert.passed, cert.to_json()
        assert sum(expected_roots(m, i).values()) == g.degree
    assert gs.g0.degree == len(kac_table(m).classes)
    assert gs.g1.degree == delta_n(m, 1)


@pytest.mark.parametrize("pq", MODELS)
def test_kac_weights_are_triple_roots_of_g2(pq):
    m = model(*pq)
    g2 = g_polys(m).g2
    for c in kac_table(m).classes:
        found, _ = root_multiset(g2, [c.delta])
        assert found[c.delta] == 3


def test_product_table_entries():
    assert PRODUCT_TABLE[("W-", "W-")] == {}
    assert COMMUTATORS[("W+", "W-")] == {"W0": {(1, 0): 2}}


@pytest.mark.parametrize("pq", MODELS)
def test_commutators_are_antisymmetrized_products(pq):
    zhu_table(model(*pq))
    for (x, y), want in COMMUTATORS.items():
        xy = zhu_multiply({x: {(0, 0): 1}}, {y: {(0, 0): 1}})
        yx = zhu_multiply({y: {(0, 0): 1}}, {x: {(0, 0): 1}})
        diff = {b: {k: xy.get(b, {}).get(k, 0) - yx.get(b, {}).get(k, 0) for k in set(xy.get(b, {})) | set(yx.get(b, {}))} for b in set(xy) | set(yx)}
        diff = {b: {k: v for k, v in c.items() if v} for b, c in diff.items()}
        assert {b: c for b, c in diff.items() if c} == want


def test_associativity_constraint_from_probe():
    t = zhu_table(model(2, 3))
    # ([W-][W0])[W0] - [W-]([W0][W0]) = (f^2 - g)[W-]
    assert t.probes[("W-", "W0", "W0")] == {"W-": {(2, 0): 1, (0, 1): -1}}
    assert "(1*g + -1*f^2)[W-] = 0" in t.constraints
    assert all(c.endswith("= 0") and "f^2" in c for c in t.constraints)


def test_f_degree_bound():
    m = model(2, 3)
    zhu_table(m, f_degree=7)
    with pytest.raises(OutOfRange):
        zhu_table(m, f_degree=8)


@pytest.mark.parametrize("pq", MODELS)
def test_census(pq):
    m = model(*pq)
    pp, pm = pq
    cen = simple_census(m)
    assert len(cen) == census_count(m) == (pp - 1) * (pm - 1) // 2 + 2 * pp * pm
    assert all(d.dim == (2 if d.kind == "Xminus" else 1) for d in cen)
    for d in cen:
        if d.kind != "minimal":
            sign = "+" if d.kind == "Xplus" else "-"
            assert d.delta == extended_weight(m, sign, *d.rs, 0).delta


def test_census_size_at_23():
    assert len(simple_census(model(2, 3))) == 13


@pytest.mark.parametrize("pq", MODELS)
def test_census_weights_are_the_roots_of_g2(pq):
    m = model(*pq)
    weights = {d.delta for d in simple_census(m)}
    found, rest = root_multiset(g_polys(m).g2, weights)
    assert set(found) == weights
    assert rest.degree == 0


@pytest.mark.parametrize("pq", MODELS)
def test_rep_check(pq):
    m = model(*pq)
    for d in simple_census(m):
        assert rep_check(m, d).passed, d
        assert not rep_check(m, d, delta=d.delta + Fraction(1, 7)).passed, d


def test_two_dimensional_rep_has_nonzero_phi():
    m = model(2, 3)
    d = next(d for d in simple_census(m) if d.kind == "Xminus" and d.rs == (1, 1))
    g1 = g_polys(m).g1
    assert g1(d.delta) != 0
    cert = rep_check(m, d)
    assert cert.passed and Fraction(cert.detail["phi^2"]) == g1(d.delta)
