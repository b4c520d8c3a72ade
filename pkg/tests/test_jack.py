import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fockjack.errors import GammaPole, LengthExceedsN, PoleAtKappa, SizeGuardExceeded
from fockjack.fock import kappa_series
from fockjack.jack import (
    b_lambda,
    cauchy_check,
    ct_pairing,
    duality_check,
    eval_check,
    eval_P,
    inner_N,
    jack,
    norm_check,
    recursive_jack,
    selberg_constant,
    specialize_pair,
)
from fockjack.partitions import Partition, dominance_compare, enumerate_partitions
from fockjack.scalars import KappaFunction
from fockjack.symfun import SymPoly, inner_kappa, restrict_N

k = KappaFunction.kappa()
parts_upto6 = [lam for d in range(1, 7) for lam in enumerate_partitions(d)]


def test_jack_degree_two():
    pair = jack((2,))
    assert pair.P == SymPoly("m", {Partition((2,)): 1, Partition((1, 1)): 2 / (k + 1)})
    assert pair.b == (k + 1) / (2 * k * k)


def test_jack_single_box_and_column():
    assert jack((1,)).P == SymPoly.m(1) and jack((1,)).b == 1 / k
    assert jack((1, 1)).P == SymPoly.m(1, 1) and jack((1, 1)).b == 2 / (k * (k + 1))


def test_p_q_dual_under_inner_product():
    for lam in enumerate_partitions(4):
        pair = jack(lam)
        assert inner_kappa(pair.P, pair.Q, k) == 1
        assert pair.Q == pair.P * pair.b


@pytest.mark.parametrize("lam", [lam for d in range(1, 9) for lam in enumerate_partitions(d)], ids=str)
def test_triangular_support(lam):
    pair = jack(lam)
    assert pair.P.coeff(lam) == 1
    for mu in pair.P.support():
        assert dominance_compare(lam, mu) in ("greater", "equal")


@pytest.mark.parametrize("lam", parts_upto6, ids=str)
def test_independent_of_linear_extension(lam):
    assert jack(lam, order="nstat").P == jack(lam).P


@pytest.mark.parametrize("lam", parts_upto6, ids=str)
def test_eigen_recursion_matches_generic_gram_schmidt(lam):
    k0 = Fraction(3, 2)
    assert jack(lam, k0, method="recursive").P == specialize_pair(jack(lam), k0).P


@pytest.mark.parametrize("k0", [Fraction(2, 3), Fraction(5, 2), Fraction(3, 4)])
def test_eigen_recursion_matches_gram_schmidt_degree_7(k0):
    for lam in [lam for d in range(1, 8) for lam in enumerate_partitions(d)]:
        assert jack(lam, k0, method="recursive").P == jack(lam, k0).P


def test_norm_closed_product_small():
    assert all(norm_check(lam) for d in range(1, 6) for lam in enumerate_partitions(d))


def test_evaluation_examples():
    X = Fraction(7, 3)
    assert eval_P((2,), X) == X * (X + k) / (k + 1)
    assert eval_P((1,), X) == X
    assert eval_P((1, 1), X) == X * (X - 1) / 2
    assert eval_check((3, 1), X)


def test_duality_and_cauchy_small():
    assert duality_check((2,)) and duality_check((1,)) and duality_check(())
    assert cauchy_check(0) and cauchy_check(1) and cauchy_check(2)


def test_inner_n_examples():
    N = 3
    assert inner_N((1,), (1,), N) == k * N / (N + k - 1)
    assert inner_N((2,), (1, 1), 2) == 0
    assert inner_N((1,), (1,), 2, 1) == 1


def test_inner_n_length_guard():
    with pytest.raises(LengthExceedsN):
        inner_N((1, 1, 1), (1, 1, 1), 2)


def test_ct_pairing_examples():
    p1 = SymPoly.p(1)
    assert ct_pairing(p1, p1, 2, 1) == 1
    assert ct_pairing(SymPoly.one(), SymPoly.one(), 3, 2) == 1
    assert ct_pairing(SymPoly.one(), SymPoly.p(2), 2, 1) == 0


def test_ct_pairing_guard():
    with pytest.raises(SizeGuardExceeded):
        ct_pairing(SymPoly.one(), SymPoly.one(), 5, 1)


def test_specialization_pole():
    # b_(1,1) = 2 / (k (k+1)) has a pole at k = -1
    with pytest.raises(PoleAtKappa):
        b_lambda((1, 1), Fraction(-1))


def test_selberg_values():
    assert selberg_constant(1, 0.7) == 1.0
    want = math.gamma(-0.4) * math.gamma(1.8) / math.gamma(1.4)
    assert selberg_constant(2, 0.4) == pytest.approx(want, rel=1e-12)
    with pytest.raises(GammaPole):
        selberg_constant(2, 1.0)


@pytest.mark.parametrize("m, N", [(1, 2), (2, 2), (1, 3), (2, 3)])
def test_rectangular_jack_is_a_single_monomial(m, N):
    lam = Partition((m,) * N)
    assert restrict_N(jack(lam).P, N) == SymPoly("m", {lam: 1})


@given(st.sampled_from(parts_upto6), st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=6))
def test_b_is_a_unit_of_the_deformation_ring(lam, k0):
    b = b_lambda(lam, kappa_series(k0, 1, 4))
    assert b.is_unit()
    assert b.constant_term == b_lambda(lam, k0)
