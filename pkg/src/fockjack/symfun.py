"""Symmetric functions in the power-sum (``"p"``) and monomial (``"m"``) bases."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Callable, Iterable, Mapping

from .partitions import Partition, enumerate_partitions, z_factor
from .scalars import scalar_from_json, scalar_to_json

BASES = ("p", "m")


class SymPoly:
    """A finite linear combination of p_lambda or m_lambda.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping | Iterable = ()):
        if basis not in BASES:
            raise ValueError(f"basis must be 'p' or 'm', got {basis!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Partition, object] = {}
        for lam, c in items:
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            c = clean.get(lam, 0) + c
            if c == 0:
                clean.pop(lam, None)
            else:
                clean[lam] = c
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("SymPoly is immutable")

    # -- constructors -------------------------------------------------------
    @classmethod
    def p(cls, *parts: int) -> "SymPoly":
        return cls("p", {Partition.from_parts(parts): Fraction(1)})

    @classmethod
    def m(cls, *parts: int) -> "SymPoly":
        return cls("m", {Partition.from_parts(parts): Fraction(1)})

    @classmethod
    def one(cls, basis: str = "p") -> "SymPoly":
        return cls(basis, {Partition(): Fraction(1)})

    @classmethod
    def zero(cls, basis: str = "p") -> "SymPoly":
        return cls(basis, {})

    # -- inspection ---------------------------------------------------------
    def coeff(self, lam) -> object:
        lam = lam if isinstance(lam, Partition) else Partition.from_parts(lam)
        return self.terms.get(lam, 0)

    def support(self) -> list[Partition]:
        return sorted(self.terms, key=lambda lam: (lam.size, lam), reverse=True)

    def degrees(self) -> set[int]:
        return {lam.size for lam in self.terms}

    def homogeneous(self, d: int) -> "SymPoly":
        return SymPoly(self.basis, {lam: c for lam, c in self.terms.items() if lam.size == d})

    def is_zero(self) -> bool:
        return not self.terms

    def map_coeffs(self, fn: Callable) -> "SymPoly":
        return SymPoly(self.basis, {lam: fn(c) for lam, c in self.terms.items()})

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, SymPoly):
            if other == 0:
                return self
            other = SymPoly(self.basis, {Partition(): other})
        other = convert(other, self.basis)
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms.get(lam, 0) + c
        return SymPoly(self.basis, terms)

    __radd__ = __add__

    def __neg__(self):
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            return multiply(self, other)
        return SymPoly(self.basis, {lam: c * other for lam, c in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, SymPoly):
            return multiply(other, self)
        return SymPoly(self.basis, {lam: other * c for lam, c in self.terms.items()})

    def __truediv__(self, other):
        return SymPoly(self.basis, {lam: c / other for lam, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, SymPoly):
            o = convert(other, self.basis)
            return self.terms == o.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"SymPoly({self.basis!r}, 0)"
        body = " + ".join(f"({c})*{self.basis}{lam}" for lam, c in sorted(self.terms.items(), reverse=True))
        return f"SymPoly({body})"

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [
                {"part": list(lam), "coef": scalar_to_json(self.terms[lam])}
                for lam in sorted(self.terms, key=lambda x: (x.size, x), reverse=True)
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SymPoly":
        return cls(obj["basis"], [(Partition(t["part"]), scalar_from_json(t["coef"])) for t in obj["terms"]])


# ---------------------------------------------------------------------------
# basis change
# ---------------------------------------------------------------------------


def _times_p(r: int, expansion: Mapping[tuple, int]) -> dict[tuple, int]:
    """Multiply an m-basis expansion by p_r (part-insertion rule)."""
    out: dict[tuple, int] = {}
    for mu, c in expansion.items():
        for v in set(mu) | {0}:
            parts = list(mu)
            if v:
                parts.remove(v)
            parts.append(v + r)
            nu = tuple(sorted(parts, reverse=True))
            out[nu] = out.get(nu, 0) + c * nu.count(v + r)
    return out


@lru_cache(maxsize=None)
def _p_in_m(lam: tuple[int, ...]) -> dict[tuple, int]:
    if not lam:
        return {(): 1}
    return _times_p(lam[-1], _p_in_m(lam[:-1]))


@lru_cache(maxsize=None)
def _m_in_p_table(d: int) -> dict[tuple, dict[tuple, Fraction]]:
    # p_lam = sum_{mu >= lam} A[lam][mu] m_mu is upper unitriangular up to the
    # diagonal A[lam][lam] = prod m_i!, so invert from the top of dominance down.
    table: dict[tuple, dict[tuple, Fraction]] = {}
    for lam in enumerate_partitions(d):
        lam = tuple(lam)
        row = _p_in_m(lam)
        acc: dict[tuple, Fraction] = {lam: Fraction(1)}
        for mu, a in row.items():
            if mu == lam:
                continue
            for rho, c in table[mu].items():
                acc[rho] = acc.get(rho, 0) - a * c
        diag = row[lam]
        table[lam] = {rho: c / diag for rho, c in acc.items() if c}
    return table


def p_to_m_coeffs(lam) -> dict[Partition, int]:
    return {Partition(mu): c for mu, c in _p_in_m(tuple(lam)).items()}


def m_to_p_coeffs(lam) -> dict[Partition, Fraction]:
    lam = tuple(lam)
    return {Partition(rho): c for rho, c in _m_in_p_table(sum(lam))[lam].items()}


def convert(f: SymPoly, target: str) -> SymPoly:
    if f.basis == target:
        return f
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    out: dict[Partition, object] = {}
    for lam, c in f.terms.items():
        expansion = _p_in_m(tuple(lam)) if f.basis == "p" else _m_in_p_table(lam.size)[tuple(lam)]
        for mu, a in expansion.items():
            mu = Partition(mu)
            out[mu] = out.get(mu, 0) + c * a
    return SymPoly(target, out)


def multiply(f: SymPoly, g: SymPoly) -> SymPoly:
    """Product in the ring; the result is expressed in f's basis."""
    fp, gp = convert(f, "p"), convert(g, "p")
    out: dict[Partition, object] = {}
    for lam, a in fp.terms.items():
        for mu, b in gp.terms.items():
            nu = Partition.from_parts(lam + mu)
            out[nu] = out.get(nu, 0) + a * b
    return convert(SymPoly("p", out), f.basis)


# ---------------------------------------------------------------------------
# bilinear form, endomorphisms, specializations
# ---------------------------------------------------------------------------


def inner_kappa(f: SymPoly, g: SymPoly, kappa):
    """<p_lam, p_mu> = delta z_lam kappa^len(lam), extended bilinearly."""
    fp, gp = convert(f, "p"), convert(g, "p")
    if len(fp.terms) > len(gp.terms):
        fp, gp = gp, fp
    acc = 0
    for lam, a in fp.terms.items():
        b = gp.terms.get(lam)
        if b is not None:
            acc = acc + a * b * z_factor(lam) * kappa ** len(lam)
    return acc


def omega_endo(f: SymPoly, beta) -> SymPoly:
    """The endomorphism p_r -> (-1)^(r-1) beta p_r.  Result in the p-basis."""
    fp = convert(f, "p")
    out = {}
    for lam, c in fp.terms.items():
        sign = -1 if sum(part - 1 for part in lam) % 2 else 1
        out[lam] = c * sign * beta ** len(lam)
    return SymPoly("p", out)


def falling_factorial(X, k: int):
    out = 1
    for i in range(k):
        out = out * (X - i)
    return out


def eval_m(lam, X):
    """epsilon_X(m_lam) = X(X-1)...(X-l+1) / prod m_i!  (l = length)."""
    denom = prod(factorial(k) for k in Counter(lam).values())
    return falling_factorial(X, len(lam)) * Fraction(1, denom)


def eval_eps(f: SymPoly, X):
    """The specialization p_r -> X for every r.

    X may be any ring element supporting + and *, e.g. a polynomial in an
    auxiliary variable.  Monomial-basis input is evaluated term by term with
    :func:`eval_m`, which avoids the basis change altogether.
    """
    acc = 0
    if f.basis == "m":
        for lam, c in f.terms.items():
            acc = acc + eval_m(lam, X) * c
        return acc
    by_len: dict[int, object] = {}
    for lam, c in f.terms.items():
        by_len[len(lam)] = by_len.get(len(lam), 0) + c
    power = 1
    for k in range(max(by_len, default=-1) + 1):
        if k in by_len:
            acc = acc + power * by_len[k]
        power = power * X
    return acc


def restrict_N(f: SymPoly, N: int) -> SymPoly:
    """Drop every m_lam with more than N parts."""
    fm = convert(f, "m")
    return SymPoly("m", {lam: c for lam, c in fm.terms.items() if len(lam) <= N})


def _distinct_perms(seq: tuple[int, ...]):
    if not seq:
        yield ()
        return
    for v in sorted(set(seq)):
        rest = list(seq)
        rest.remove(v)
        for tail in _distinct_perms(tuple(rest)):
            yield (v,) + tail


def to_variables(f: SymPoly, N: int) -> dict[tuple[int, ...], object]:
    """Explicit polynomial in x_1..x_N as {exponent tuple: coefficient}."""
    out: dict[tuple[int, ...], object] = {}
    for lam, c in restrict_N(f, N).terms.items():
        padded = tuple(lam) + (0,) * (N - len(lam))
        for e in _distinct_perms(padded):
            out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c != 0}
