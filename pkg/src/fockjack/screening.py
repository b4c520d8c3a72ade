"""Screening images, extended weights and the soliton-sector bookkeeping.

Singular vectors come in closed form: the image of the top vector under a
power of one screening operator is rho_gamma applied to a rectangular Jack
Q-function.  The soliton vectors W_{n,m} are kept abstract (a label plus
the numbers that act on it).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .certificate import Certificate
from .errors import EmptyPartition, NotProportional, OutOfRange, OutOfSector, SizeGuardExceeded
from .fock import FockElement, ModelParams, rho_gamma, weight
from .jack import b_lambda, eval_P, eval_Q, jack
from .partitions import Partition, all_box_stats, lambda_minus, lambda_plus
from .symfun import eval_eps

MAX_SINGULAR_SIZE = 12
MAX_PROPORTIONALITY_SIZE = 10
MAX_STRUCT_SIZE = 24
SIGNS = ("+", "-")


def _check_sign(sign: str):
    if sign not in SIGNS:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def _rect_jack_Q(lam: Partition, kappa):
    # the recursion is exact and much cheaper than Gram-Schmidt at these degrees
    return jack(lam, kappa, method="recursive").Q


# ---------------------------------------------------------------------------
# singular vectors
# ---------------------------------------------------------------------------


def screening_image(m: ModelParams, sign: str, r: int, s: int) -> FockElement:
    """S_+^[r] |beta_{r,s}> (sign +, r >= 1) or S_-^[s] |beta_{r,s}> (sign -, s >= 1).

    The image lives in F_{-r,s} (resp. F_{r,-s}); it vanishes unless the
    other index is <= 0, in which case it is rho_gamma of a rectangular
    Q-function whose degree matches the weight gap.
    """
    _check_sign(sign)
    if sign == "+":
        if r < 1:
            raise OutOfRange(f"S_+^[r] needs r >= 1, got {r}")
        target = weight(m, -r, s)
        if s >= 1:
            return FockElement(target)
        lam = Partition((-s,) * r) if s < 0 else Partition()
        kappa, gamma = m.kappa_minus, 2 / m.alpha_plus
    else:
        if s < 1:
            raise OutOfRange(f"S_-^[s] needs s >= 1, got {s}")
        target = weight(m, r, -s)
        if r >= 1:
            return FockElement(target)
        lam = Partition((-r,) * s) if r < 0 else Partition()
        kappa, gamma = m.kappa_plus, 2 / m.alpha_minus
    if lam.size > MAX_SINGULAR_SIZE:
        raise SizeGuardExceeded(f"degree {lam.size} exceeds {MAX_SINGULAR_SIZE}")
    if not lam:
        return FockElement.vacuum(target)
    Q = _rect_jack_Q(lam, kappa)
    return rho_gamma(Q, gamma, target)


def singular_vector(m: ModelParams, sign: str, r: int, s: int) -> FockElement:
    """Singular vector of grade rs in F_{-r,-s}, built from S_+ (sign +) or S_- (sign -)."""
    _check_sign(sign)
    if r < 1 or s < 1:
        raise OutOfRange(f"need r, s >= 1, got ({r},{s})")
    if r * s > MAX_SINGULAR_SIZE:
        raise SizeGuardExceeded(f"rs = {r * s} exceeds {MAX_SINGULAR_SIZE}")
    if sign == "+":
        return screening_image(m, "+", r, -s)
    return screening_image(m, "-", -r, s)


def expected_ratio(m: ModelParams, r: int, s: int) -> Fraction:
    """(-1)^{rs} b_{(s)^r}(kappa_-)."""
    return (-1) ** (r * s) * b_lambda(Partition((s,) * r), m.kappa_minus)


def proportionality(m: ModelParams, r: int, s: int) -> Certificate:
    """Check singular_vector(+) = (-1)^{rs} b_{(s)^r}(kappa_-) singular_vector(-)."""
    if r * s > MAX_PROPORTIONALITY_SIZE:
        raise SizeGuardExceeded(f"rs = {r * s} exceeds {MAX_PROPORTIONALITY_SIZE}")
    plus = singular_vector(m, "+", r, s)
    minus = singular_vector(m, "-", r, s)
    if minus.is_zero() or plus.is_zero():
        raise NotProportional("a screening image vanished", plus, minus)
    lam, c = next(iter(minus.terms.items()))
    ratio = plus.terms.get(lam, 0) / c
    if plus != minus * ratio:
        raise NotProportional(f"images for (r,s)=({r},{s}) are not proportional", plus, minus)
    expected = expected_ratio(m, r, s)
    return Certificate(
        name=f"proportionality{m}({r},{s})",
        lhs=ratio,
        rhs=expected,
        passed=ratio == expected,
        ratio=ratio,
    )


# ---------------------------------------------------------------------------
# extended weights
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtendedWeight:
    delta: Fraction
    case: str  # which of the four (r = p_+?, s = p_-?) branches fired
    label: tuple[int, int, int]  # the (r', s', n') with delta = h_{r',s';n'}

    def to_json(self) -> dict:
        return {"delta": str(self.delta), "case": self.case, "h_label": list(self.label)}


def extended_weight(m: ModelParams, sign: str, r: int, s: int, n: int) -> ExtendedWeight:
    """Lowest weight Delta^{+-}_{r,s;n} of the soliton sector V^{+-}_{r,s;n}."""
    _check_sign(sign)
    pp, pm = m.p_plus, m.p_minus
    if not (1 <= r <= pp and 1 <= s <= pm) or n < 0:
        raise OutOfRange(f"(r,s,n)=({r},{s},{n}) outside 1<=r<={pp}, 1<=s<={pm}, n>=0")
    shift = 0 if sign == "+" else 1
    if r == pp and s == pm:
        case, label = "r=p+,s=p-", (pp, pm, -2 * n - shift)
    elif s == pm:
        case, label = "r<p+,s=p-", (pp - r, pm, -2 * n - 1 - shift)
    elif r == pp:
        case, label = "r=p+,s<p-", (pp, pm - s, 2 * n + 1 + shift)
    else:
        case, label = "r<p+,s<p-", (pp - r, s, -2 * n - 1 - shift)
    return ExtendedWeight(m.h(*label), case, label)


def delta_n(m: ModelParams, n: int) -> int:
    """Delta_n = ((n+1)p_+ - 1)((n+1)p_- - 1), the weight of W_{n,m}."""
    return ((n + 1) * m.p_plus - 1) * ((n + 1) * m.p_minus - 1)


# ---------------------------------------------------------------------------
# soliton sectors and Frobenius maps
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class SolitonLabel:
    sign: str
    r: int
    s: int
    n: int
    m: int

    def __post_init__(self):
        _check_sign(self.sign)
        top = self.n if self.sign == "+" else self.n + 1
        if self.n < 0 or not (-self.n <= self.m <= top):
            raise OutOfSector(f"m={self.m} outside [-{self.n}, {top}] for sign {self.sign}")
        if self.r < 1 or self.s < 1:
            raise OutOfSector(f"(r,s)=({self.r},{self.s}) must be positive")

    @property
    def top(self) -> int:
        return self.n if self.sign == "+" else self.n + 1

    def shifted(self, dm: int) -> "SolitonLabel | None":
        m = self.m + dm
        if -self.n <= m <= self.top:
            return SolitonLabel(self.sign, self.r, self.s, self.n, m)
        return None

    def to_json(self) -> dict:
        return {"sign": self.sign, "r": self.r, "s": self.s, "n": self.n, "m": self.m}

    @classmethod
    def from_json(cls, obj: dict) -> "SolitonLabel":
        return cls(obj["sign"], obj["r"], obj["s"], obj["n"], obj["m"])


def sector_labels(sign: str, r: int, s: int, n: int) -> list[SolitonLabel]:
    """Basis labels of V^{sign}_{r,s;n}: 2n+1 of them for +, 2n+2 for -."""
    top = n if sign == "+" else n + 1
    return [SolitonLabel(sign, r, s, n, mm) for mm in range(-n, top + 1)]


def is_vacuum_chain(w: SolitonLabel) -> bool:
    return w.sign == "+" and w.r == 1 and w.s == 1


def lowering_coefficient(m: ModelParams, n: int, mm: int) -> Fraction:
    """Coefficient c with F W_{n,mm} = c W_{n,mm-1} on the vacuum chain."""
    if mm <= -n:
        return Fraction(0)
    num = b_lambda(lambda_plus(n, mm, m.p_plus, m.p_minus), m.kappa_minus)
    den = b_lambda(lambda_plus(n, mm - 1, m.p_plus, m.p_minus), m.kappa_minus)
    return -num / den


def _raise(m: ModelParams | None, w: SolitonLabel) -> dict:
    up = w.shifted(1)
    return {} if up is None else {up: Fraction(1)}


def _lower(m: ModelParams | None, w: SolitonLabel) -> dict:
    down = w.shifted(-1)
    if down is None:
        return {}
    if is_vacuum_chain(w):
        if m is None:
            raise OutOfSector("the vacuum-chain F action needs a model")
        return {down: lowering_coefficient(m, w.n, w.m)}
    return {down: Fraction(1)}


def _apply_map(fn, m, combo: dict) -> dict:
    out: dict = {}
    for w, c in combo.items():
        for w2, c2 in fn(m, w).items():
            out[w2] = out.get(w2, 0) + c * c2
    return {w: c for w, c in out.items() if c != 0}


def frobenius_apply(X: str, w, m: ModelParams | None = None) -> dict[SolitonLabel, Fraction]:
    """Apply E, F or H = EF - FE to a label (or to a {label: coeff} combination)."""
    combo = {w: Fraction(1)} if isinstance(w, SolitonLabel) else dict(w)
    if X == "E":
        return _apply_map(_raise, m, combo)
    if X == "F":
        return _apply_map(_lower, m, combo)
    if X == "H":
        ef = _apply_map(_raise, m, _apply_map(_lower, m, combo))
        fe = _apply_map(_lower, m, _apply_map(_raise, m, combo))
        out = dict(ef)
        for k, c in fe.items():
            out[k] = out.get(k, 0) - c
        return {k: c for k, c in out.items() if c != 0}
    raise ValueError(f"unknown Frobenius map {X!r}")


# ---------------------------------------------------------------------------
# structure constants
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructConst:
    kind: str
    n: int
    k: int
    value: Fraction
    partition: Partition
    second_route: Fraction | None  # None when the size guard skipped it

    @property
    def two_route(self) -> bool:
        return self.second_route is not None

    def certificate(self) -> Certificate:
        rhs = self.value if self.second_route is None else self.second_route
        return Certificate(
            name=f"{self.kind}_{{{self.n},{self.k}}}",
            lhs=self.value,
            rhs=rhs,
            passed=self.value == rhs,
            detail={"partition": list(self.partition), "two_route": self.two_route},
        )


def struct_partition(m: ModelParams, kind: str, n: int, k: int) -> Partition:
    try:
        if kind == "a":
            return lambda_plus(n + k, 1 - n, m.p_plus, m.p_minus)
        if kind == "b":
            return lambda_minus(n + k, n - 1, m.p_plus, m.p_minus)
    except EmptyPartition as exc:
        raise OutOfRange(f"{kind}_{{{n},{k}}}: {exc}") from exc
    raise ValueError(f"kind must be 'a' or 'b', got {kind!r}")


def _b_prefactor(m: ModelParams, n: int, k: int) -> Fraction:
    num = b_lambda(lambda_plus(1, 1, m.p_plus, m.p_minus), m.kappa_minus)
    den = b_lambda(lambda_plus(n, n, m.p_plus, m.p_minus), m.kappa_minus)
    return (-1) ** (k + 1) * num / den


def _closed_a(m: ModelParams, lam: Partition) -> Fraction:
    X, k = 2 * (2 * m.p_plus - 1), m.kappa_minus
    out = Fraction(1)
    for a, leg, ac, lc in all_box_stats(lam):
        num = X + k * ac - lc
        if num == 0:
            return Fraction(0)
        out *= num / (k * (a + 1) + leg)
    return out


def struct_const(m: ModelParams, kind: str, n: int, k: int, guard: int = MAX_STRUCT_SIZE) -> StructConst:
    """a_{n,k} or b_{n,k}, by closed product and (within the guard) by evaluating a Jack function.

    The closed product for a is epsilon_X(Q_lam(kappa_-)) with X = 2(2p_+ - 1).
    For b the closed product is epsilon_X(P_lam(kappa_+)) with X = 2(2p_- - 1)
    times the sign and b-ratio prefactor; the second route evaluates the
    explicit P-function in the same normalization.
    """
    if n < 0 or k < -1:
        raise OutOfRange(f"need n >= 0 and k >= -1, got ({n},{k})")
    lam = struct_partition(m, kind, n, k)
    if kind == "a":
        value = _closed_a(m, lam)
        assert value == eval_Q(lam, 2 * (2 * m.p_plus - 1), m.kappa_minus)
    else:
        X = 2 * (2 * m.p_minus - 1)
        value = _b_prefactor(m, n, k) * eval_P(lam, X, m.kappa_plus)
    second = None
    if lam.size <= guard:
        if kind == "a":
            Q = jack(lam, m.kappa_minus, method="recursive").Q
            second = Fraction(eval_eps(Q, 2 * (2 * m.p_plus - 1)))
        else:
            P = jack(lam, m.kappa_plus, method="recursive").P
            second = _b_prefactor(m, n, k) * eval_eps(P, 2 * (2 * m.p_minus - 1))
    return StructConst(kind, n, k, value, lam, second)


def struct_const_range(m: ModelParams, kind: str, guard: int = MAX_STRUCT_SIZE) -> list[StructConst]:
    """Every (n,k) whose partition is non-empty and fits the guard."""
    out = []
    for n in range(0, 40):
        found = False
        for k in range(-1, 40):
            try:
                lam = struct_partition(m, kind, n, k)
            except OutOfRange:
                continue
            if lam.size > guard:
                break
            found = True
            out.append(struct_const(m, kind, n, k, guard))
        if not found and n > 1:
            break
    return out
