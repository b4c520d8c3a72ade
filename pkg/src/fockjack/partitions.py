"""Integer partitions and Young-diagram statistics."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator

from .errors import BoxOutOfDiagram, DegreeMismatch, EmptyPartition


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Zero parts are dropped on construction, so ``Partition((2, 1, 0)) ==
    Partition((2, 1))``.  Construction from an unsorted sequence is an error;
    use :meth:`from_parts` for that.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        ps = tuple(int(p) for p in parts if p != 0)
        for x, y in zip(ps, ps[1:]):
            if x < y:
                raise ValueError(f"parts of a partition must be weakly decreasing: {ps}")
        if ps and ps[-1] < 0:
            raise ValueError(f"parts of a partition must be positive: {ps}")
        return super().__new__(cls, ps)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        return cls(sorted((p for p in parts if p), reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def boxes(self) -> Iterator[tuple[int, int]]:
        """Boxes (i, j), 1-based, row by row."""
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield i, j

    def __repr__(self):
        return f"Partition({', '.join(map(str, self))})" if self else "Partition()"

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"

    def to_json(self) -> list[int]:
        return list(self)


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


@lru_cache(maxsize=None)
def _conj(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def conjugate(lam) -> Partition:
    return Partition(_conj(tuple(_as_partition(lam))))


def box_stats(lam, box: tuple[int, int]) -> tuple[int, int, int, int]:
    """(arm, leg, co-arm, co-leg) of the box (i, j)."""
    lam = _as_partition(lam)
    i, j = box
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise BoxOutOfDiagram(f"box {box} is not in {lam}")
    lc = _conj(tuple(lam))
    return lam[i - 1] - j, lc[j - 1] - i, j - 1, i - 1


def all_box_stats(lam) -> list[tuple[int, int, int, int]]:
    lam = _as_partition(lam)
    lc = _conj(tuple(lam))
    return [(lam[i - 1] - j, lc[j - 1] - i, j - 1, i - 1) for i, j in lam.boxes()]


def dominates(lam, mu) -> bool:
    """lam >= mu in dominance order (same degree assumed)."""
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam[k] if k < len(lam) else 0
        b += mu[k] if k < len(mu) else 0
        if a < b:
            return False
    return True


def dominance_compare(lam, mu) -> str:
    """One of 'greater', 'less', 'equal', 'incomparable'."""
    lam, mu = _as_partition(lam), _as_partition(mu)
    if lam.size != mu.size:
        raise DegreeMismatch(f"{lam} and {mu} have different degrees")
    if lam == mu:
        return "equal"
    if dominates(lam, mu):
        return "greater"
    if dominates(mu, lam):
        return "less"
    return "incomparable"


def z_factor(lam) -> Fraction:
    out = 1
    for part, m in Counter(_as_partition(lam)).items():
        out *= part**m * factorial(m)
    return Fraction(out)


def n_statistic(lam) -> int:
    """n(lam) = sum (i-1) lam_i.  Strictly decreasing along dominance."""
    return sum(i * p for i, p in enumerate(lam))


@lru_cache(maxsize=None)
def _partitions(d: int, cap: int) -> tuple[tuple[int, ...], ...]:
    # partitions of d with parts <= cap, reverse-lexicographic
    if d == 0:
        return ((),)
    out = []
    for first in range(min(d, cap), 0, -1):
        for rest in _partitions(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(d: int, max_len: int | None = None) -> list[Partition]:
    """All partitions of d, largest first in reverse-lexicographic order."""
    if d < 0:
        return []
    parts = _partitions(d, d)
    if max_len is not None:
        parts = tuple(p for p in parts if len(p) <= max_len)
    return [Partition(p) for p in parts]


def partition_counts(n_max: int) -> list[int]:
    """p(0), ..., p(n_max) by Euler's pentagonal-number recurrence."""
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        acc = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            acc += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                acc += sign * p[n - g2]
            k += 1
        p[n] = acc
    return p


def rect(m: int, N: int) -> Partition:
    """m repeated N times."""
    if m < 1 or N < 1:
        raise EmptyPartition(f"rectangle ({m})^{N} is degenerate")
    return Partition((m,) * N)


def lambda_plus(n: int, m: int, p_plus: int, p_minus: int) -> Partition:
    """((n-m+1)p_- - 1)^((n+m+1)p_+ - 1)."""
    return _rect_exp((n - m + 1) * p_minus - 1, (n + m + 1) * p_plus - 1)


def lambda_minus(n: int, m: int, p_plus: int, p_minus: int) -> Partition:
    """((n+m+1)p_+ - 1)^((n-m+1)p_- - 1), the conjugate of lambda_plus."""
    return _rect_exp((n + m + 1) * p_plus - 1, (n - m + 1) * p_minus - 1)


def _rect_exp(part: int, times: int) -> Partition:
    if part < 1 or times < 1:
        raise EmptyPartition(f"({part})^{times} has a non-positive exponent")
    return Partition((part,) * times)


def special_partition(kind: str, a: int, b: int, model=None) -> Partition:
    """Dispatch for 'rect' (a=m, b=N), 'lambda_plus' and 'lambda_minus' (a=n, b=m)."""
    if kind == "rect":
        return rect(a, b)
    if model is None:
        raise ValueError(f"{kind} needs a model")
    if kind == "lambda_plus":
        return lambda_plus(a, b, model.p_plus, model.p_minus)
    if kind == "lambda_minus":
        return lambda_minus(a, b, model.p_plus, model.p_minus)
    raise ValueError(f"unknown partition family {kind!r}")
