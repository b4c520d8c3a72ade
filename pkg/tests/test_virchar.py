from fractions import Fraction
from functools import lru_cache

import pytest

from fockjack import model
from fockjack.errors import CharacterMismatch, OutOfRange
from fockjack.fock import FockElement, raw_weight, virasoro_apply
from fockjack.linalg import rank
from fockjack.partitions import Partition, enumerate_partitions
from fockjack.virchar import (
    CharSeries,
    felder_euler,
    fock_character,
    kernel_image_check,
    kx_characters,
    minimal_character,
    socle_certificate,
    socle_constituents,
    solve_simple_characters,
)

L = 20


@lru_cache(maxsize=None)
def solved(pq, cutoff=L, seed=None):
    return solve_simple_characters(model(*pq), cutoff, order_seed=seed)


def _shapovalov_dims(m, beta, depth):
    """dim L(h_beta)_N for N <= depth, as the rank of the Gram matrix <h| L_I L_{-J} |h>.

    The Gram matrix of the Verma module only depends on (h, c), so it can be
    evaluated inside any Fock module F_beta with matching h.
    """
    w = raw_weight(m, beta)
    dims = []
    for N in range(depth + 1):
        parts = enumerate_partitions(N)
        vecs = []
        for lam in parts:
            v = FockElement.vacuum(w)
            for k in reversed(lam):
                v = virasoro_apply(v, -k)
            vecs.append(v)
        rows = []
        for lam in parts:
            row = []
            for v in vecs:
                u = v
                for k in lam:
                    u = virasoro_apply(u, k)
                row.append(u.terms.get(Partition(), 0))
            rows.append([m.quad(x) for x in row])
        dims.append(rank(rows, len(parts)) if parts else 1)
    return dims


def test_fock_character_examples():
    m = model(2, 3)
    ch = fock_character(m, 1, 1, 0, 10)
    assert ch.coeffs == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)
    assert ch.offset == 0
    assert fock_character(m, 1, 1, -1, 3).offset == 2
    with pytest.raises(OutOfRange):
        fock_character(m, 1, 1, 0, 61)


def test_char_series_offsets():
    a = CharSeries(Fraction(0), (1, 2, 3))
    b = CharSeries(Fraction(1), (1, 1))
    assert (a + b).coeffs == (1, 3, 4)
    assert CharSeries.from_json(a.to_json()) == a
    assert a != CharSeries(Fraction(1, 2), (1, 2, 3))
    with pytest.raises(CharacterMismatch):
        a + CharSeries(Fraction(1, 2), (1,))


def test_socle_cases():
    m = model(2, 3)
    assert socle_constituents(m, 2, 3, 1, 30).case == "III"
    assert len(socle_constituents(m, 2, 3, 1, 30).components) == 1
    d = socle_constituents(m, 1, 1, 0, 30)
    assert d.case == "I" and len(d.components) == 3
    d = socle_constituents(m, 2, 1, 1, 30)
    assert d.case == "II_r=p+" and len(d.components) == 2
    assert socle_constituents(m, 1, 3, 0, 30).case == "II_s=p-"


@pytest.mark.parametrize("pq", [(2, 3), (2, 5)])
def test_socle_sums_reproduce_fock_characters(pq):
    m = model(*pq)
    sc = solved(pq)
    for r in range(1, m.p_plus + 1):
        for s in range(1, m.p_minus + 1):
            for n in range(-3, 4):
                assert socle_certificate(m, sc, (r, s, n), L).passed, (r, s, n)


def test_trivial_character_at_23():
    sc = solved((2, 3))
    ch = sc[Fraction(0)].window(0, L)
    assert ch.coeffs == (1,) + (0,) * L


@pytest.mark.parametrize("pq", [(2, 3), (2, 5), (3, 4)])
def test_solved_characters_are_genuine(pq):
    sc = solved(pq)
    for ch in sc.chars.values():
        assert ch.coeffs[0] == 1
        assert all(isinstance(c, int) and c >= 0 for c in ch.coeffs)


@pytest.mark.parametrize("pq", [(2, 3), (2, 5), (3, 4)])
def test_minimal_characters_match_closed_formula(pq):
    m = model(*pq)
    sc = solved(pq)
    for r in range(1, m.p_plus):
        for s in range(1, m.p_minus):
            rc = minimal_character(m, r, s, L)
            assert rc == sc[m.h(r, s)]


@pytest.mark.parametrize("pq", [(2, 3), (2, 5), (3, 4)])
def test_solved_characters_against_shapovalov_rank(pq):
    # independent oracle: ranks of the Verma Gram matrix, computed in a Fock module
    m = model(*pq)
    sc = solved(pq)
    depth = 7
    for r in range(1, m.p_plus + 1):
        for s in range(1, m.p_minus + 1):
            for n in (0, 1):
                lab = (r, s, n)
                h = m.h(*lab)
                want = _shapovalov_dims(m, m.beta(*lab), depth)
                got = sc[h].window(h, h + depth).coeffs
                assert list(got) == want, lab


def test_solver_is_order_independent():
    base = solved((2, 5))
    for seed in (1, 2, 3):
        other = solved((2, 5), L, seed)
        assert other.chars == base.chars


def test_felder_examples():
    m = model(2, 3)
    assert felder_euler(m, 1, 1, L).window(0, L).coeffs == (1,) + (0,) * L
    assert felder_euler(m, 1, 3, L).is_zero()
    m = model(2, 5)
    sc = solved((2, 5))
    assert felder_euler(m, 1, 2, L) == sc[Fraction(-1, 5)]


@pytest.mark.parametrize("pq", [(2, 3), (2, 5)])
def test_felder_complexes(pq):
    m = model(*pq)
    sc = solved(pq)
    for r in range(1, m.p_plus):
        for s in range(1, m.p_minus + 1):
            fe = felder_euler(m, r, s, L)
            assert all(c >= 0 for c in fe.coeffs)
            assert fe.is_zero() if s == m.p_minus else fe == sc[m.h(r, s)]
            longer = felder_euler(m, r, s, L + 5)
            assert longer.window(fe.offset, fe.top) == fe
    for s in range(1, m.p_minus):
        for r in range(1, m.p_plus + 1):
            fe = felder_euler(m, r, s, L, screening="-")
            assert fe.is_zero() if r == m.p_plus else fe == sc[m.h(r, s)]


@pytest.mark.parametrize("pq", [(2, 3), (2, 5)])
def test_kernel_image_characters(pq):
    m = model(*pq)
    sc = solved(pq)
    for r in range(1, m.p_plus + 1):
        for s in range(1, m.p_minus + 1):
            for sign in "+-":
                cert = kx_characters(m, r, s, sign, L, sc)
                assert cert.passed, (r, s, sign)
            if r < m.p_plus and s < m.p_minus:
                for n in range(-3, 4):
                    assert kernel_image_check(m, r, s, n, L, sc).passed


def test_kx_examples():
    m = model(2, 3)
    sc = solved((2, 3))
    cert = kx_characters(m, 1, 1, "+", L, sc)
    quotient = CharSeries.from_json(cert.detail["K_minus_X"])
    assert quotient.coeffs[0] == 1 and not any(quotient.coeffs[1:])
    assert kx_characters(m, 2, 3, "+", L, sc).detail["K_equals_X"] is True
    minus = kx_characters(m, 1, 1, "-", L, sc)
    route = CharSeries.from_json(minus.lhs)
    assert route.coeffs[0] == 2
