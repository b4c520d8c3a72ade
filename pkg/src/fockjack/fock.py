"""Fock modules of the rank-one Heisenberg algebra and their Virasoro action.

Conventions: [b_m, b_n] = m delta_{m+n,0}, b_0 |beta> = beta |beta>, and

    L_n = 1/2 sum_k :b_{n-k} b_k: - (alpha_0 / 2)(n + 1) b_n,

so L_0 |beta> = h_beta |beta> with h_beta = beta (beta - alpha_0) / 2.  A
vector is stored as {partition lam: coefficient}, lam standing for the
monomial b_{-lam_1} ... b_{-lam_k} |beta>.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Mapping

from .errors import BadConstantTerm, NotCoprime, OutOfRange, SizeGuardExceeded, ZeroFirstOrder
from .linalg import nullspace
from .partitions import Partition, enumerate_partitions
from .scalars import EpsSeries, QuadScalar, scalar_to_json
from .symfun import SymPoly, convert

MAX_SINGULAR_LEVEL = 12


# ---------------------------------------------------------------------------
# parameters
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ModelParams:
    p_plus: int
    p_minus: int
    D: Fraction
    alpha_plus: QuadScalar
    alpha_minus: QuadScalar
    alpha0: QuadScalar
    alpha: QuadScalar
    kappa_plus: Fraction
    kappa_minus: Fraction
    c: Fraction

    def beta(self, r: int, s: int, n: int = 0) -> QuadScalar:
        """beta_{r,s;n} = beta_{r - n p_+, s}."""
        r = r - n * self.p_plus
        return self.alpha_plus * Fraction(1 - r, 2) + self.alpha_minus * Fraction(1 - s, 2)

    def h(self, r: int, s: int, n: int = 0) -> Fraction:
        """h_{r,s;n} from the closed quadratic formula."""
        r = r - n * self.p_plus
        return (
            Fraction(r * r - 1, 4) * self.kappa_plus
            - Fraction(r * s - 1, 2)
            + Fraction(s * s - 1, 4) * self.kappa_minus
        )

    def h_of_beta(self, beta) -> QuadScalar:
        return beta * (beta - self.alpha0) / 2

    def quad(self, x) -> QuadScalar:
        if isinstance(x, QuadScalar):
            return x
        return QuadScalar(x, 0, self.D)

    def __str__(self):
        return f"({self.p_plus},{self.p_minus})"


@lru_cache(maxsize=None)
def model(p_plus: int, p_minus: int) -> ModelParams:
    if p_plus < 2 or p_minus < 2:
        raise OutOfRange(f"p_+ and p_- must be at least 2, got ({p_plus},{p_minus})")
    if gcd(p_plus, p_minus) != 1:
        raise NotCoprime(f"({p_plus},{p_minus}) are not coprime")
    D = Fraction(2 * p_minus, p_plus)
    a_plus = QuadScalar.sqrt(D)
    # sqrt(2p_+/p_-) = (p_+/p_-) sqrt(2p_-/p_+)
    a_minus = QuadScalar.sqrt(D, Fraction(-p_plus, p_minus))
    return ModelParams(
        p_plus=p_plus,
        p_minus=p_minus,
        D=D,
        alpha_plus=a_plus,
        alpha_minus=a_minus,
        alpha0=a_plus + a_minus,
        alpha=a_plus * p_plus,
        kappa_plus=Fraction(p_minus, p_plus),
        kappa_minus=Fraction(p_plus, p_minus),
        c=1 - Fraction(6 * (p_plus - p_minus) ** 2, p_plus * p_minus),
    )


@dataclass(frozen=True)
class FockWeight:
    model: ModelParams = field(repr=False)
    beta: QuadScalar
    label: tuple[int, int, int] | None = None

    @property
    def h(self) -> QuadScalar:
        return self.model.h_of_beta(self.beta)

    def dual(self) -> "FockWeight":
        """Weight of the contragredient module: beta -> alpha_0 - beta, (r,s,n) -> (-r,-s,-n)."""
        label = None if self.label is None else tuple(-x for x in self.label)
        return FockWeight(self.model, self.model.alpha0 - self.beta, label)

    def to_json(self):
        if self.label is not None:
            r, s, n = self.label
            return {"r": r, "s": s, "n": n}
        return scalar_to_json(self.beta)


def weight(m: ModelParams, r: int, s: int, n: int = 0) -> FockWeight:
    return FockWeight(m, m.beta(r, s, n), (r, s, n))


def raw_weight(m: ModelParams, beta) -> FockWeight:
    return FockWeight(m, m.quad(beta), None)


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------


class FockElement:
    """Finite combination of monomials b_{-lam}|beta> at one Heisenberg weight."""

    __slots__ = ("weight", "terms")

    def __init__(self, weight: FockWeight, terms: Mapping = ()):
        self.weight = weight
        clean = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for lam, c in items:
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            c = clean.get(lam, 0) + c
            if c == 0:
                clean.pop(lam, None)
            else:
                clean[lam] = c
        self.terms = clean

    @classmethod
    def vacuum(cls, weight: FockWeight) -> "FockElement":
        return cls(weight, {Partition(): Fraction(1)})

    @property
    def model(self) -> ModelParams:
        return self.weight.model

    def grades(self) -> set[int]:
        return {lam.size for lam in self.terms}

    def grade(self, d: int) -> "FockElement":
        return FockElement(self.weight, {lam: c for lam, c in self.terms.items() if lam.size == d})

    def is_zero(self) -> bool:
        return not self.terms

    def _same(self, other: "FockElement"):
        if other.weight.beta != self.weight.beta:
            raise ValueError("vectors live in different Fock modules")

    def __add__(self, other):
        if isinstance(other, FockElement):
            self._same(other)
            t = dict(self.terms)
            for lam, c in other.terms.items():
                t[lam] = t.get(lam, 0) + c
            return FockElement(self.weight, t)
        return NotImplemented

    def __neg__(self):
        return FockElement(self.weight, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, FockElement):
            return NotImplemented
        return FockElement(self.weight, {lam: c * scalar for lam, c in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return FockElement(self.weight, {lam: c / scalar for lam, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, FockElement):
            return self.weight.beta == other.weight.beta and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.weight.beta, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "FockElement(0)"
        body = " + ".join(f"({c})b{tuple(-p for p in lam)}" for lam, c in sorted(self.terms.items()))
        return f"FockElement({body} |{self.weight.beta}>)"

    def to_json(self) -> dict:
        return {
            "beta": self.weight.to_json(),
            "terms": [
                {"part": list(lam), "coef": scalar_to_json(self.terms[lam])}
                for lam in sorted(self.terms, key=lambda x: (x.size, x), reverse=True)
            ],
        }


# ---------------------------------------------------------------------------
# Heisenberg and Virasoro actions
# ---------------------------------------------------------------------------


def _mode_on_monomial(lam: tuple, n: int, beta) -> list[tuple[tuple, object]]:
    """b_n applied to b_{-lam}|beta>, as a list of (monomial, coefficient)."""
    if n < 0:
        return [(tuple(sorted(lam + (-n,), reverse=True)), 1)]
    if n == 0:
        return [(lam, beta)]
    mult = lam.count(n)
    if not mult:
        return []
    rest = list(lam)
    rest.remove(n)
    return [(tuple(rest), n * mult)]


def _apply_mode(vec: dict, n: int, beta) -> dict:
    out: dict = {}
    for lam, c in vec.items():
        for mu, f in _mode_on_monomial(lam, n, beta):
            out[mu] = out.get(mu, 0) + c * f
    return {k: v for k, v in out.items() if v != 0}


def heisenberg_apply(v: FockElement, n: int) -> FockElement:
    out = _apply_mode({tuple(lam): c for lam, c in v.terms.items()}, n, v.weight.beta)
    return FockElement(v.weight, out)


@lru_cache(maxsize=200_000)
def _virasoro_on_monomial(lam: tuple, n: int, beta, alpha0) -> tuple:
    g = sum(lam)
    start = {lam: Fraction(1)}
    acc: dict = {}

    def add(vec, f=1):
        for mu, c in vec.items():
            acc[mu] = acc.get(mu, 0) + c * f

    # pairs k > n - k: the mode b_k (the larger index) acts first
    for k in range(n // 2 + 1, max(g, 0) + 1):
        first = _apply_mode(start, k, beta)
        if first:
            add(_apply_mode(first, n - k, beta))
    if n % 2 == 0:
        half = n // 2
        first = _apply_mode(start, half, beta)
        if first:
            add(_apply_mode(first, half, beta), Fraction(1, 2))
    add(_apply_mode(start, n, beta), -alpha0 * Fraction(n + 1, 2))
    return tuple((mu, c) for mu, c in acc.items() if c != 0)


def virasoro_apply(v: FockElement, n: int) -> FockElement:
    """L_n v."""
    beta, a0 = v.weight.beta, v.model.alpha0
    out: dict = {}
    for lam, c in v.terms.items():
        for mu, f in _virasoro_on_monomial(tuple(lam), n, beta, a0):
            out[mu] = out.get(mu, 0) + c * f
    return FockElement(v.weight, out)


def l0_eigenvalue(v: FockElement):
    """The L_0 eigenvalue of v, or None if v is not an eigenvector (or zero)."""
    if v.is_zero():
        return None
    w = virasoro_apply(v, 0)
    lam, c = next(iter(v.terms.items()))
    ev = w.terms.get(lam, 0) / c
    return ev if w == v * ev else None


# ---------------------------------------------------------------------------
# transport from symmetric functions
# ---------------------------------------------------------------------------


def rho_gamma(f: SymPoly, gamma, target: FockWeight) -> FockElement:
    """The algebra map p_n -> gamma b_{-n}, applied to |target>."""
    fp = convert(f, "p")
    return FockElement(target, {lam: c * gamma ** len(lam) for lam, c in fp.terms.items()})


# ---------------------------------------------------------------------------
# brute-force singular vectors
# ---------------------------------------------------------------------------


def _level_matrix(w: FockWeight, level: int, n: int) -> list[list]:
    """Matrix of L_n from grade `level` to grade `level - n` in the monomial basis."""
    src = enumerate_partitions(level)
    dst = {tuple(lam): i for i, lam in enumerate(enumerate_partitions(level - n))}
    cols = []
    for lam in src:
        image = dict(_virasoro_on_monomial(tuple(lam), n, w.beta, w.model.alpha0))
        col = [0] * len(dst)
        for mu, c in image.items():
            col[dst[mu]] = c
        cols.append(col)
    return [list(row) for row in zip(*cols)] if cols else []


def singular_space(m: ModelParams, w: FockWeight, level: int) -> list[FockElement]:
    """Basis of the grade-`level` vectors killed by L_1 and L_2."""
    if level > MAX_SINGULAR_LEVEL:
        raise SizeGuardExceeded(f"level {level} exceeds {MAX_SINGULAR_LEVEL}")
    if level < 0:
        return []
    if level == 0:
        return [FockElement.vacuum(w)]
    rows = _level_matrix(w, level, 1)
    if level >= 2:
        rows += _level_matrix(w, level, 2)
    basis = enumerate_partitions(level)
    rows = [[m.quad(x) for x in row] for row in rows]
    out = []
    for vec in nullspace(rows, len(basis), one=m.quad(1)):
        out.append(FockElement(w, {lam: c for lam, c in zip(basis, vec)}))
    return out


# ---------------------------------------------------------------------------
# contragredient pairing
# ---------------------------------------------------------------------------


def contragredient_pairing(phi: FockElement, u: FockElement):
    """<phi, u> for phi in F_{alpha_0 - beta} and u in F_beta.

    Defined by <|alpha_0-beta>, |beta>> = 1 and the anti-involution
    b_n -> delta_{n,0} alpha_0 - b_{-n}: each creation mode on phi is moved
    across as minus the matching annihilation mode on u.
    """
    if phi.weight.beta != u.model.alpha0 - u.weight.beta:
        raise ValueError("phi must live in the contragredient module of u")
    total = 0
    for lam, c in phi.terms.items():
        vec = {tuple(lam2): c2 for lam2, c2 in u.terms.items() if lam2.size == lam.size}
        for part in lam:
            vec = _apply_mode(vec, part, u.weight.beta)
        vac = vec.get((), 0)
        if vac != 0:
            total = total + c * vac * (-1) ** len(lam)
    return total


# ---------------------------------------------------------------------------
# deformation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DeformedModel:
    base: ModelParams
    alpha_plus: EpsSeries
    alpha_minus: EpsSeries
    kappa_plus: EpsSeries
    kappa_minus: EpsSeries
    alpha0: EpsSeries

    @property
    def K(self) -> int:
        return self.alpha_plus.K

    def beta_eps(self, r: int, s: int, n: int = 0) -> EpsSeries:
        r = r - n * self.base.p_plus
        return self.alpha_plus * Fraction(1 - r, 2) + self.alpha_minus * Fraction(1 - s, 2)

    def h_eps(self, r: int, s: int, n: int = 0) -> EpsSeries:
        r = r - n * self.base.p_plus
        return (
            self.kappa_plus * Fraction(r * r - 1, 4)
            - Fraction(r * s - 1, 2)
            + self.kappa_minus * Fraction(s * s - 1, 4)
        )

    def h_of_beta(self, beta: EpsSeries) -> EpsSeries:
        return beta * (beta - self.alpha0) / 2


def deform(m: ModelParams, alpha_plus_series: EpsSeries) -> DeformedModel:
    a = alpha_plus_series
    if a.constant_term != m.alpha_plus:
        raise BadConstantTerm(f"constant term {a.constant_term} differs from alpha_+ = {m.alpha_plus}")
    if a.K > 1 and a[1] == 0:
        raise ZeroFirstOrder("first-order coefficient of alpha_+(eps) must be nonzero")
    a_minus = -2 * a.inv()
    return DeformedModel(
        base=m,
        alpha_plus=a,
        alpha_minus=a_minus,
        kappa_plus=a * a / 2,
        kappa_minus=a_minus * a_minus / 2,
        alpha0=a + a_minus,
    )


def kappa_series(kappa0, kappa1=1, K: int = 8) -> EpsSeries:
    """kappa(eps) = kappa0 + kappa1 eps, with kappa0 rational and not in Q_{<=0}."""
    kappa0 = Fraction(kappa0)
    if kappa0 <= 0:
        raise OutOfRange(f"kappa0 = {kappa0} lies in Q_<=0")
    if kappa1 == 0:
        raise ZeroFirstOrder("kappa1 must be nonzero")
    return EpsSeries([kappa0, Fraction(kappa1)], K)
