"""Truncated q-characters: Fock modules, socle constituents, simple modules, Felder complexes.

A character is stored from its lowest exponent upward.  All Virasoro
modules here are multiplicity free in their composition factors, so a
socle layer is just a list of conformal weights (with the (r,s,n) label that
produced each one).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .certificate import Certificate
from .errors import CharacterMismatch, NegativeCoefficient, OutOfRange, TriangularityViolated
from .fock import ModelParams
from .partitions import partition_counts
from .screening import extended_weight

MAX_FOCK_CUTOFF = 60
MAX_SOLVER_CUTOFF = 40


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CharSeries:
    """sum_k coeffs[k] q^(offset + k), exact for every exponent <= top."""

    offset: Fraction
    coeffs: tuple[int, ...]

    @property
    def top(self) -> Fraction:
        return self.offset + len(self.coeffs) - 1

    @classmethod
    def zero(cls, offset, top) -> "CharSeries":
        return cls(Fraction(offset), (0,) * (int(top - offset) + 1))

    def at(self, exponent) -> int:
        k = exponent - self.offset
        if k.denominator != 1 or exponent > self.top:
            raise CharacterMismatch(f"exponent {exponent} is outside this series")
        return self.coeffs[int(k)] if k >= 0 else 0

    def _grid(self, other: "CharSeries"):
        gap = self.offset - other.offset
        if gap.denominator != 1:
            raise CharacterMismatch(f"disjoint support: offsets {self.offset} and {other.offset}")
        lo = min(self.offset, other.offset)
        hi = min(self.top, other.top)
        return lo, hi

    def window(self, lo, hi) -> "CharSeries":
        """Re-express over [lo, hi]; lo may lie below the offset (zero padding).

        hi is rounded down onto the exponent grid lo + Z.
        """
        lo, hi = Fraction(lo), Fraction(hi)
        hi = lo + ((hi - lo) // 1)
        if (lo - self.offset).denominator != 1 or hi > self.top:
            raise CharacterMismatch(f"window [{lo}, {hi}] incompatible with [{self.offset}, {self.top}]")
        return CharSeries(lo, tuple(self.at(lo + k) for k in range(int(hi - lo) + 1)))

    def __add__(self, other: "CharSeries") -> "CharSeries":
        lo, hi = self._grid(other)
        return CharSeries(lo, tuple(self.at(lo + k) + other.at(lo + k) for k in range(int(hi - lo) + 1)))

    def __neg__(self):
        return CharSeries(self.offset, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c: int):
        return CharSeries(self.offset, tuple(c * x for x in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, CharSeries):
            return NotImplemented
        try:
            lo, hi = self._grid(other)
        except CharacterMismatch:
            return False
        return all(self.at(lo + k) == other.at(lo + k) for k in range(int(hi - lo) + 1))

    def __hash__(self):
        return hash(self.offset)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def trimmed(self) -> "CharSeries":
        """Drop leading zeros (the offset moves to the first non-zero exponent)."""
        k = next((i for i, c in enumerate(self.coeffs) if c), len(self.coeffs))
        if k == len(self.coeffs):
            return CharSeries(self.top, (0,))
        return CharSeries(self.offset + k, self.coeffs[k:])

    def to_json(self) -> dict:
        return {"offset": str(self.offset), "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> "CharSeries":
        return cls(Fraction(obj["offset"]), tuple(int(c) for c in obj["coeffs"]))


def fock_character(m: ModelParams, r: int, s: int, n: int, L: int) -> CharSeries:
    """ch F_{r,s;n} to order L: p(k) at exponent h_{r,s;n} + k."""
    if not 0 <= L <= MAX_FOCK_CUTOFF:
        raise OutOfRange(f"cutoff {L} outside [0, {MAX_FOCK_CUTOFF}]")
    return CharSeries(m.h(r, s, n), tuple(partition_counts(L)))


def _fock_upto(m: ModelParams, label, top) -> CharSeries:
    h = m.h(*label)
    return CharSeries(h, tuple(partition_counts(int(top - h))))


def minimal_character(m: ModelParams, r: int, s: int, L: int) -> CharSeries:
    """Closed alternating sum for the simple module L(h_{r,s}), 1 <= r < p_+, 1 <= s < p_-."""
    if not (1 <= r < m.p_plus and 1 <= s < m.p_minus):
        raise OutOfRange(f"({r},{s}) is not in the Kac table")
    h0 = m.h(r, s)
    top = h0 + L
    acc = [0] * (L + 1)
    k = 0
    while True:
        hit = False
        for kk in {k, -k}:
            for sign, ss in ((1, s), (-1, -s)):
                e = m.h(r + 2 * kk * m.p_plus, ss) - h0
                if e <= L:
                    hit = True
                    p = partition_counts(int(L - e))
                    for i, c in enumerate(p):
                        acc[int(e) + i] += sign * c
        if not hit and k > 0:
            break
        k += 1
    return CharSeries(h0, tuple(acc))


# ---------------------------------------------------------------------------
# socle data
# ---------------------------------------------------------------------------

Label = tuple[int, int, int]


@dataclass(frozen=True)
class SocleData:
    r: int
    s: int
    n: int
    case: str
    components: tuple[tuple[Label, ...], ...]  # S_1, S_2 (, S_3)
    top: Fraction  # weights above this bound were not enumerated

    def labels(self) -> list[Label]:
        return [lab for comp in self.components for lab in comp]

    def weights(self, m: ModelParams) -> list[Fraction]:
        return [m.h(*lab) for lab in self.labels()]

    def to_json(self) -> dict:
        return {
            "rsn": [self.r, self.s, self.n],
            "case": self.case,
            "components": [[list(lab) for lab in comp] for comp in self.components],
        }


def _ray(m: ModelParams, r: int, s: int, start: int, step: int, bound) -> list[Label]:
    """Labels (r, s, start + step k), k >= 0, with weight <= bound.

    Weights grow quadratically in the last index, so the walk stops once
    the weights exceed the bound and are increasing.
    """
    out = []
    k, prev = 0, None
    while True:
        lab = (r, s, start + step * k)
        h = m.h(*lab)
        if h <= bound:
            out.append(lab)
        elif prev is not None and h > prev:
            break
        prev = h
        k += 1
        if k > 10_000:
            raise RuntimeError("runaway enumeration")
    return out


def socle_case(m: ModelParams, r: int, s: int) -> str:
    if not (1 <= r <= m.p_plus and 1 <= s <= m.p_minus):
        raise OutOfRange(f"({r},{s}) outside 1<=r<={m.p_plus}, 1<=s<={m.p_minus}")
    if r < m.p_plus and s < m.p_minus:
        return "I"
    if r == m.p_plus and s < m.p_minus:
        return "II_r=p+"
    if r < m.p_plus:
        return "II_s=p-"
    return "III"


def socle_constituents(m: ModelParams, r: int, s: int, n: int, L) -> SocleData:
    """Socle layers of F_{r,s;n}, listing every constituent of weight <= h_{r,s;n} + L."""
    pp, pm = m.p_plus, m.p_minus
    case = socle_case(m, r, s)
    bound = m.h(r, s, n) + L
    a_abs = abs(n)
    ray = lambda rr, ss, start: _ray(m, rr, ss, start, 2, bound)
    if case == "I":
        a = 0 if n >= 0 else 1
        comps = (
            ray(r, pm - s, a_abs + 1),
            ray(r, s, a_abs + 2 * a) + ray(pp - r, pm - s, a_abs + 2 * (1 - a)),
            ray(pp - r, s, a_abs + 1),
        )
    elif case == "II_r=p+":
        a = 0 if n >= 1 else 1
        comps = (ray(pp, pm - s, a_abs + 1), ray(pp, s, a_abs + 2 * a))
    elif case == "II_s=p-":
        # the top weight sits in S_1 exactly when n >= 0
        a = 1 if n >= 0 else 0
        comps = (ray(r, pm, a_abs), ray(pp - r, pm, a_abs + 2 * a - 1))
    else:
        comps = (ray(pp, pm, a_abs),)
    return SocleData(r, s, n, case, tuple(tuple(c) for c in comps), bound)


# ---------------------------------------------------------------------------
# kernels and images of one screening power
# ---------------------------------------------------------------------------


def _kernel_image_lists(m: ModelParams, kind: str, r: int, s: int, n: int, bound) -> list[Label]:
    """Constituents of K_{r,s;n;+-} or X_{r,s;n;+-} for 1 <= r < p_+, 1 <= s < p_-.

    The image lists are indexed by the module they live in: X_{r,s;n;+} is
    the image in F_{r,s;n} of the S_+ power leaving F_{p_+-r,s;n-1}, and
    X_{r,s;n;-} the image of the S_- power leaving F_{r,p_--s;n+1}.
    """
    pp, pm = m.p_plus, m.p_minus
    rs_dual = (r, pm - s)
    ray = lambda lab, start, step=2: _ray(m, lab[0], lab[1], start, step, bound)
    if kind == "K+":
        if n >= 0:
            return ray(rs_dual, n + 1) + ray((r, s), n)
        return ray(rs_dual, -n + 1) + ray((r, s), -n + 2)
    if kind == "X+":
        t = n - 1
        if t >= 0:
            return ray(rs_dual, t + 2) + ray((r, s), t + 1)
        return ray(rs_dual, -t) + ray((r, s), -t + 1)
    if kind == "K-":
        if n >= 1:
            return ray(rs_dual, n + 1) + ray((pp - r, pm - s), n + 2)
        return ray(rs_dual, -n + 1) + ray((pp - r, pm - s), -n)
    if kind == "X-":
        t = n + 1
        if t >= 1:
            return ray(rs_dual, t) + ray((pp - r, pm - s), t + 1)
        return ray(rs_dual, -t + 2) + ray((pp - r, pm - s), -t + 1)
    raise ValueError(f"unknown kernel/image kind {kind!r}")


def _by_weight(m: ModelParams, labels: Iterable[Label]) -> dict[Fraction, Label]:
    out: dict[Fraction, Label] = {}
    for lab in labels:
        h = m.h(*lab)
        if h in out:
            raise CharacterMismatch(f"weight {h} occurs twice ({out[h]} and {lab})")
        out[h] = lab
    return out


def kernel_weights(m: ModelParams, r: int, s: int, n: int, bound) -> dict[Fraction, Label]:
    """Constituents of K_{r,s;n}, the joint kernel (or S_1(F) on the boundary of the table)."""
    case = socle_case(m, r, s)
    if case == "I":
        kp = _by_weight(m, _kernel_image_lists(m, "K+", r, s, n, bound))
        km = _by_weight(m, _kernel_image_lists(m, "K-", r, s, n, bound))
        return {h: lab for h, lab in kp.items() if h in km}
    if case == "III":
        return _by_weight(m, socle_constituents(m, r, s, n, bound - m.h(r, s, n)).labels())
    return _by_weight(m, socle_constituents(m, r, s, n, bound - m.h(r, s, n)).components[0])


def image_weights(m: ModelParams, r: int, s: int, n: int, bound) -> dict[Fraction, Label]:
    """Constituents of X_{r,s;n}, the intersection of both images."""
    if socle_case(m, r, s) == "I":
        xp = _by_weight(m, _kernel_image_lists(m, "X+", r, s, n, bound))
        xm = _by_weight(m, _kernel_image_lists(m, "X-", r, s, n, bound))
        return {h: lab for h, lab in xp.items() if h in xm}
    return kernel_weights(m, r, s, n, bound)


# ---------------------------------------------------------------------------
# simple characters by triangular elimination
# ---------------------------------------------------------------------------


@dataclass
class SimpleCharacters:
    model: ModelParams = field(repr=False)
    top: Fraction
    chars: dict[Fraction, CharSeries]  # keyed by lowest weight
    labels: dict[Label, Fraction]  # every Fock label with weight <= top
    verified: int = 0  # number of socle equations re-checked

    def __getitem__(self, h) -> CharSeries:
        return self.chars[Fraction(h)]

    def to_json(self) -> dict:
        return {str(h): c.to_json() for h, c in sorted(self.chars.items())}


def _labels_below(m: ModelParams, top) -> dict[Label, Fraction]:
    out = {}
    for r in range(1, m.p_plus + 1):
        for s in range(1, m.p_minus + 1):
            for n in _n_range(m, r, s, top):
                out[(r, s, n)] = m.h(r, s, n)
    return out


def _n_range(m: ModelParams, r: int, s: int, top) -> list[int]:
    ns = []
    for sign in (1, -1):
        n, prev = (0 if sign == 1 else -1), None
        while True:
            h = m.h(r, s, n)
            if h <= top:
                ns.append(n)
            elif prev is not None and h > prev:
                break
            prev = h
            n += sign
    return sorted(ns)


def default_top(m: ModelParams, L: int, n_max: int = 3) -> Fraction:
    """Largest h_{r,s;n} + L over the Fock modules with |n| <= n_max."""
    return max(
        m.h(r, s, n) + L
        for r in range(1, m.p_plus + 1)
        for s in range(1, m.p_minus + 1)
        for n in range(-n_max, n_max + 1)
    )


def solve_simple_characters(m: ModelParams, L: int, n_max: int = 3, order_seed: int | None = None) -> SimpleCharacters:
    """ch L(h) for every Fock lowest weight h up to a common window.

    The window top is max h_{r,s;n} + L over |n| <= n_max.  Each Fock
    module has its own lowest weight as unique minimal constituent, so
    ch L(h_{r,s;n}) = ch F_{r,s;n} minus the characters of its other
    constituents, which all have larger weight and are solved first.
    Afterwards every socle equation in the window is re-verified.
    """
    if not 0 <= L <= MAX_SOLVER_CUTOFF:
        raise OutOfRange(f"cutoff {L} outside [0, {MAX_SOLVER_CUTOFF}]")
    top = default_top(m, L, n_max)
    labels = _labels_below(m, top)
    # one representative Fock module per distinct weight
    reps: dict[Fraction, list[Label]] = {}
    for lab, h in labels.items():
        reps.setdefault(h, []).append(lab)
    if order_seed is not None:
        import random

        rng = random.Random(order_seed)
        for v in reps.values():
            rng.shuffle(v)
    chars: dict[Fraction, CharSeries] = {}
    for h in sorted(reps, reverse=True):
        lab = reps[h][0]
        soc = socle_constituents(m, *lab, top - h)
        ws = soc.weights(m)
        if ws.count(h) != 1 or min(ws) != h:
            raise TriangularityViolated(f"F{lab}: lowest weight {h} is not the unique minimal constituent")
        acc = _fock_upto(m, lab, top)
        for w in ws:
            if w != h:
                acc = acc - chars[w].window(h, top)
        if any(c < 0 for c in acc.coeffs):
            raise NegativeCoefficient(f"ch L({h}) from F{lab} has a negative coefficient")
        if acc.coeffs[0] != 1:
            raise CharacterMismatch(f"ch L({h}) does not start with 1")
        chars[h] = acc
    out = SimpleCharacters(m, top, chars, labels)
    out.verified = _verify_all_socles(m, out)
    return out


def socle_sum(m: ModelParams, sc: SimpleCharacters, lab: Label) -> CharSeries:
    h = m.h(*lab)
    soc = socle_constituents(m, *lab, sc.top - h)
    acc = CharSeries.zero(h, sc.top)
    for w in soc.weights(m):
        acc = acc + sc.chars[w].window(h, sc.top)
    return acc


def _verify_all_socles(m: ModelParams, sc: SimpleCharacters) -> int:
    count = 0
    for lab, h in sc.labels.items():
        if socle_sum(m, sc, lab) != _fock_upto(m, lab, sc.top):
            raise CharacterMismatch(f"socle sum of F{lab} differs from its Fock character")
        count += 1
    return count


def socle_certificate(m: ModelParams, sc: SimpleCharacters, lab: Label, L: int) -> Certificate:
    h = m.h(*lab)
    hi = min(h + L, sc.top)
    lhs = socle_sum(m, sc, lab).window(h, hi)
    rhs = _fock_upto(m, lab, sc.top).window(h, hi)
    return Certificate(f"socle{m}{lab}", lhs.to_json(), rhs.to_json(), lhs == rhs)


# ---------------------------------------------------------------------------
# Felder complexes
# ---------------------------------------------------------------------------


def _felder_terms(m: ModelParams, r: int, s: int, screening: str) -> Iterator[tuple[int, Label]]:
    """(position j, Fock label) of the two-sided complex, walking outward from j = 0."""
    pp, pm = m.p_plus, m.p_minus
    j = 0
    while True:
        for jj in ((j,) if j == 0 else (j, -j)):
            if screening == "+":
                lab = (r, s, jj) if jj % 2 == 0 else (pp - r, s, jj)
            else:
                lab = (r, s, -jj) if jj % 2 == 0 else (r, pm - s, -jj)
            yield jj, lab
        j += 1


def felder_euler(m: ModelParams, r: int, s: int, L: int, screening: str = "+") -> CharSeries:
    """Alternating sum of the Fock characters in the screening complex through F_{r,s;0}."""
    pp, pm = m.p_plus, m.p_minus
    if screening == "+" and not (1 <= r < pp and 1 <= s <= pm):
        raise OutOfRange(f"S_+ complex needs 1 <= r < {pp}, 1 <= s <= {pm}")
    if screening == "-" and not (1 <= r <= pp and 1 <= s < pm):
        raise OutOfRange(f"S_- complex needs 1 <= r <= {pp}, 1 <= s < {pm}")
    h0 = m.h(r, s)
    top = h0 + L
    acc = [0] * (L + 1)
    quiet = 0  # consecutive positions whose modules lie entirely above the window
    last_h: dict[int, Fraction] = {}
    for j, lab in _felder_terms(m, r, s, screening):
        h = m.h(*lab)
        side = (j > 0) - (j < 0)
        rising = side in last_h and h > last_h[side]
        last_h[side] = h
        if h > top:
            quiet = quiet + 1 if rising else 0
            if quiet >= 4:
                break
            continue
        quiet = 0
        e = h - h0
        if e.denominator != 1:
            raise CharacterMismatch(f"F{lab} is not integrally spaced from h_{{{r},{s}}}")
        for i, c in enumerate(partition_counts(int(L - e))):
            acc[int(e) + i] += (-1) ** abs(j) * c
    return CharSeries(h0, tuple(acc))


# ---------------------------------------------------------------------------
# kernels and images summed over a parity class
# ---------------------------------------------------------------------------


def _sum_weights(m: ModelParams, sc: SimpleCharacters, weights: Iterable[Fraction], lo, hi) -> CharSeries:
    acc = CharSeries.zero(lo, hi)
    for w in weights:
        if w < lo:
            raise CharacterMismatch(f"constituent {w} lies below the window start {lo}")
        if w <= hi:
            acc = acc + sc.chars[w].window(lo, hi)
    return acc


def _family_weights(m: ModelParams, r: int, s: int, sign: str, top, which) -> list[Fraction]:
    """Constituent weights <= top of K_{r,s;n} (which=kernel_weights) or X_{r,s;n}, over n of one parity.

    Both are submodules of F_{r,s;n}, so only n with h_{r,s;n} <= top contribute.
    """
    parity = 0 if sign == "+" else 1
    out: list[Fraction] = []
    for n in _n_range(m, r, s, top):
        if n % 2 == parity:
            out.extend(which(m, r, s, n, top).keys())
    return out


def kx_characters(m: ModelParams, r: int, s: int, sign: str, L: int, sc: SimpleCharacters | None = None) -> Certificate:
    """ch X^{+-}_{r,s} from soliton multiplicities against the kernel/image socle lists.

    Route (i): sum_n dim V_{r,s;n} ch L(Delta_{r,s;n}), dims 2n+1 (+) / 2n+2 (-).
    Route (ii): sum over Fock modules of one parity of ch X_{r,s;n}.
    For sign + and (r,s) inside the Kac range also checks ch K^+ = ch X^+ + ch L(h_{r,s;0}).
    """
    if sc is None:
        sc = solve_simple_characters(m, min(L, MAX_SOLVER_CUTOFF))
    d0 = extended_weight(m, sign, r, s, 0).delta
    # X^- lives on the odd Fock family, whose weights are off the grid of h_{r,s}
    lo = min(d0, m.h(r, s)) if sign == "+" else d0
    hi = lo + L
    if hi > sc.top:
        raise OutOfRange(f"solved window ends at {sc.top}, need {hi}")
    # route (i)
    route1 = CharSeries.zero(lo, hi)
    n = 0
    while True:
        d = extended_weight(m, sign, r, s, n).delta
        if d > hi:
            break
        dim = 2 * n + 1 if sign == "+" else 2 * n + 2
        route1 = route1 + dim * sc.chars[d].window(lo, hi)
        n += 1
    # route (ii)
    route2 = _sum_weights(m, sc, _family_weights(m, r, s, sign, hi, image_weights), lo, hi)
    detail = {"route_i": route1.to_json(), "route_ii": route2.to_json()}
    passed = route1 == route2
    kern = _sum_weights(m, sc, _family_weights(m, r, s, sign, hi, kernel_weights), lo, hi)
    if sign == "+" and socle_case(m, r, s) == "I":
        quotient = kern - route2
        detail["K_minus_X"] = quotient.to_json()
        passed = passed and quotient == sc.chars[m.h(r, s)].window(lo, hi)
    else:
        detail["K_equals_X"] = kern == route2
        passed = passed and kern == route2
    return Certificate(f"KX{sign}{m}({r},{s})", route1.to_json(), route2.to_json(), passed, detail=detail)


def kernel_image_check(m: ModelParams, r: int, s: int, n: int, L: int, sc: SimpleCharacters) -> Certificate:
    """ch F = ch K_+ + ch X_+(target) and ch F = ch K_- + ch X_-(target) for a Kac-range Fock module."""
    pp, pm = m.p_plus, m.p_minus
    h = m.h(r, s, n)
    hi = min(h + L, sc.top)

    def ch(labels):
        return _sum_weights(m, sc, _by_weight(m, labels).keys(), h, hi)

    fock = _fock_upto(m, (r, s, n), sc.top).window(h, hi)
    plus = ch(_kernel_image_lists(m, "K+", r, s, n, hi)) + ch(_kernel_image_lists(m, "X+", pp - r, s, n + 1, hi))
    minus = ch(_kernel_image_lists(m, "K-", r, s, n, hi)) + ch(_kernel_image_lists(m, "X-", r, pm - s, n - 1, hi))
    return Certificate(
        f"FKX{m}({r},{s},{n})",
        fock.to_json(),
        {"plus": plus.to_json(), "minus": minus.to_json()},
        plus == fock and minus == fock,
    )
