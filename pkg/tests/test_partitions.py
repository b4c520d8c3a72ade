from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fockjack import model
from fockjack.errors import BoxOutOfDiagram, DegreeMismatch, EmptyPartition
from fockjack.partitions import (
    Partition,
    box_stats,
    conjugate,
    dominance_compare,
    enumerate_partitions,
    partition_counts,
    rect,
    special_partition,
    z_factor,
)

partitions = st.lists(st.integers(1, 8), max_size=6).map(Partition.from_parts)


def _coin_counts(n_max):
    # independent oracle: coefficients of prod_k 1/(1 - q^k)
    p = [1] + [0] * n_max
    for k in range(1, n_max + 1):
        for n in range(k, n_max + 1):
            p[n] += p[n - k]
    return p


@pytest.mark.parametrize(
    "lam, want",
    [((4, 2), (2, 2, 1, 1)), ((), ()), ((5,), (1, 1, 1, 1, 1))],
)
def test_conjugate_examples(lam, want):
    assert conjugate(lam) == Partition(want)


@pytest.mark.parametrize(
    "lam, box, want",
    [((4, 2), (1, 2), (2, 1, 1, 0)), ((1,), (1, 1), (0, 0, 0, 0)), ((3, 3), (2, 3), (0, 0, 2, 1))],
)
def test_box_stats_examples(lam, box, want):
    assert box_stats(lam, box) == want


def test_box_outside_diagram():
    with pytest.raises(BoxOutOfDiagram):
        box_stats((2, 1), (2, 2))


@pytest.mark.parametrize(
    "lam, mu, want",
    [((2,), (1, 1), "greater"), ((3, 1, 1, 1), (2, 2, 2), "incomparable"), ((2, 1), (2, 1), "equal"), ((1, 1), (2,), "less")],
)
def test_dominance_examples(lam, mu, want):
    assert dominance_compare(lam, mu) == want


def test_dominance_needs_equal_degree():
    with pytest.raises(DegreeMismatch):
        dominance_compare((2,), (1,))


@pytest.mark.parametrize("lam, want", [((2,), 2), ((2, 1, 1), 4), ((), 1)])
def test_z_factor_examples(lam, want):
    assert z_factor(lam) == Fraction(want)


def test_enumeration_examples():
    assert enumerate_partitions(4) == [Partition(p) for p in [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]]
    assert enumerate_partitions(0) == [Partition()]
    assert enumerate_partitions(4, max_len=2) == [Partition(p) for p in [(4,), (3, 1), (2, 2)]]


def test_partition_counts_match_product_oracle():
    assert partition_counts(40) == _coin_counts(40)
    assert [len(enumerate_partitions(d)) for d in range(16)] == _coin_counts(15)


def test_enumeration_order_extends_dominance():
    for d in range(1, 9):
        ps = enumerate_partitions(d)
        for i, lam in enumerate(ps):
            for mu in ps[i + 1 :]:
                assert dominance_compare(lam, mu) in ("greater", "incomparable")


def test_special_partition_examples():
    m = model(2, 3)
    assert special_partition("lambda_plus", 1, 1, m) == Partition((2,) * 5)
    assert special_partition("lambda_minus", 1, 1, m) == Partition((5, 5))
    assert rect(1, 1) == Partition((1,))


def test_degenerate_exponent():
    with pytest.raises(EmptyPartition):
        special_partition("lambda_plus", 0, 1, model(2, 3))


@given(partitions)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size


@given(partitions)
def test_arm_leg_swap_under_conjugation(lam):
    mu = conjugate(lam)
    for i, j in lam.boxes():
        a, leg, ac, lc = box_stats(lam, (i, j))
        assert box_stats(mu, (j, i)) == (leg, a, lc, ac)


@given(st.sampled_from([(2, 3), (2, 5), (3, 4)]), st.integers(0, 2), st.integers(-2, 2))
def test_lambda_pm_sizes(pq, n, mm):
    m = model(*pq)
    pp, pm = pq
    try:
        lp = special_partition("lambda_plus", n, mm, m)
    except EmptyPartition:
        return
    lm = special_partition("lambda_minus", n, mm, m)
    assert lp.size == ((n - mm + 1) * pm - 1) * ((n + mm + 1) * pp - 1) == lm.size
    assert lm == conjugate(lp)
