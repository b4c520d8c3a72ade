"""Kac table, zero-mode eigenvalue polynomials, the zero-mode algebra relations and its simple modules.

omega_n(beta) is the eigenvalue of the zero mode of W_{n,0} on |beta>; it is
a polynomial of degree Delta_n in beta whose roots form a rectangular grid.
Its even powers are invariant under beta -> alpha_0 - beta and so become
polynomials in h = beta (beta - alpha_0) / 2.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .certificate import Certificate
from .errors import (
    DegreeGuardExceeded,
    FactorizationMismatch,
    InconsistentTable,
    NotSymmetric,
    OutOfRange,
    RelationViolated,
)
from .fock import ModelParams
from .jack import jack
from .partitions import lambda_plus
from .scalars import QuadScalar, scalar_to_json
from .screening import delta_n, extended_weight
from .symfun import eval_eps

MAX_OMEGA_N = 2
MAX_TWO_ROUTE_SIZE = 24


# ---------------------------------------------------------------------------
# dense univariate polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Dense polynomial, constant term first, over any exact ring."""

    __slots__ = ("c", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "beta"):
        c = [Fraction(a) if isinstance(a, int) else a for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)
        self.var = var

    @classmethod
    def x(cls, var: str = "beta") -> "Poly":
        return cls([0, 1], var)

    @classmethod
    def const(cls, a, var: str = "beta") -> "Poly":
        return cls([a], var)

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    @property
    def lead(self):
        return self.c[-1] if self.c else 0

    def _co(self, other) -> "Poly":
        return other if isinstance(other, Poly) else Poly([other], self.var)

    def __add__(self, other):
        o = self._co(other)
        n = max(len(self.c), len(o.c))
        a = list(self.c) + [0] * (n - len(self.c))
        for i, x in enumerate(o.c):
            a[i] = a[i] + x
        return Poly(a, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-x for x in self.c], self.var)

    def __sub__(self, other):
        return self + (-self._co(other))

    def __rsub__(self, other):
        return self._co(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([x * other for x in self.c], self.var)
        if not self.c or not other.c:
            return Poly([], self.var)
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j, b in enumerate(other.c):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly([1], self.var)
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, scalar):
        return Poly([x / scalar for x in self.c], self.var)

    def divmod(self, q: "Poly") -> tuple["Poly", "Poly"]:
        if not q.c:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        dq = q.degree
        if len(r) - 1 < dq:
            return Poly([], self.var), self
        quo = [0] * (len(r) - dq)
        for k in range(len(r) - 1 - dq, -1, -1):
            a = r[k + dq] / q.lead
            quo[k] = a
            if a != 0:
                for j in range(dq + 1):
                    r[k + j] = r[k + j] - a * q.c[j]
        return Poly(quo, self.var), Poly(r[:dq], self.var)

    def __call__(self, x):
        acc = 0
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly([], self.var)
        for a in reversed(self.c):
            acc = acc * inner + a
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.c == other.c
        return self.c == Poly([other]).c

    def __hash__(self):
        return hash(self.c)

    def is_zero(self) -> bool:
        return not self.c

    def __repr__(self):
        return f"Poly({self.var}, deg {self.degree})"

    def __str__(self):
        terms = []
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            terms.append(f"({a})" + ("*" + mono if mono else "") if mono else f"({a})")
        return " + ".join(terms) or "0"

    def to_json(self) -> dict:
        return {"var": self.var, "coeffs": [scalar_to_json(a) for a in self.c]}


def BetaPoly(coeffs=()) -> Poly:
    return Poly(coeffs, "beta")


def HPoly(coeffs=()) -> Poly:
    return Poly(coeffs, "h")


# ---------------------------------------------------------------------------
# Kac table
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KacClass:
    reps: tuple[tuple[int, int], ...]  # (r,s) first, the lexicographically smaller one
    delta: Fraction

    @property
    def rs(self) -> tuple[int, int]:
        return self.reps[0]

    def to_json(self) -> dict:
        return {"rs": list(self.rs), "delta": str(self.delta)}


@dataclass(frozen=True)
class KacTable:
    model: ModelParams = field(repr=False)
    classes: tuple[KacClass, ...]

    def deltas(self) -> list[Fraction]:
        return [c.delta for c in self.classes]

    def to_json(self) -> dict:
        return {"classes": [c.to_json() for c in self.classes]}


def kac_table(m: ModelParams) -> KacTable:
    """Classes of (r,s), 1 <= r < p_+, 1 <= s < p_-, modulo (r,s) ~ (p_+ - r, p_- - s)."""
    pp, pm = m.p_plus, m.p_minus
    seen = set()
    classes = []
    for r in range(1, pp):
        for s in range(1, pm):
            if (r, s) in seen:
                continue
            partner = (pp - r, pm - s)
            seen.update({(r, s), partner})
            reps = tuple(sorted({(r, s), partner}))
            classes.append(KacClass(reps, m.h(r, s)))
    return KacTable(m, tuple(classes))


# ---------------------------------------------------------------------------
# omega_n and conversion to h
# ---------------------------------------------------------------------------


def _omega_dims(m: ModelParams, n: int) -> tuple[int, int]:
    return (n + 1) * m.p_plus - 1, (n + 1) * m.p_minus - 1


@lru_cache(maxsize=None)
def omega_closed(m: ModelParams, n: int) -> Poly:
    """Grid product over the roots beta_{i,j} with the normalizing denominators."""
    I, J = _omega_dims(m, n)
    beta = Poly.x()
    out = Poly.const(m.quad(1))
    norm = m.quad(1)
    for i in range(1, I + 1):
        for j in range(1, J + 1):
            out = out * (beta - m.beta(i, j))
            norm = norm * m.beta(I + 1 - i, 1 + j - (J + 1))
    return out / norm


def omega_jack(m: ModelParams, n: int) -> Poly:
    """epsilon_X(Q_lam(kappa_-)) with X = alpha_- beta and lam = lambda^+_{n,0}."""
    lam = lambda_plus(n, 0, m.p_plus, m.p_minus)
    Q = jack(lam, m.kappa_minus, method="recursive").Q
    X = Poly.x() * m.alpha_minus
    return Poly.const(m.quad(0)) + eval_eps(Q, X)


@dataclass(frozen=True)
class OmegaResult:
    n: int
    poly: Poly
    second_route: Poly | None

    @property
    def two_route(self) -> bool:
        return self.second_route is not None

    def certificate(self) -> Certificate:
        ok = self.second_route is None or self.second_route == self.poly
        return Certificate(
            name=f"omega_{self.n}",
            lhs=self.poly.to_json(),
            rhs=None if self.second_route is None else self.second_route.to_json(),
            passed=ok,
            detail={"degree": self.poly.degree, "two_route": self.two_route},
        )


def omega_poly(m: ModelParams, n: int, max_n: int = MAX_OMEGA_N) -> OmegaResult:
    if n < 0:
        raise OutOfRange(f"n = {n} must be non-negative")
    if n > max_n:
        raise DegreeGuardExceeded(f"omega_{n} has degree {delta_n(m, n)}; guard is n <= {max_n}")
    closed = omega_closed(m, n)
    second = None
    if lambda_plus(n, 0, m.p_plus, m.p_minus).size <= MAX_TWO_ROUTE_SIZE:
        second = omega_jack(m, n)
    return OmegaResult(n, closed, second)


def flip(f: Poly, alpha0) -> Poly:
    """f(alpha_0 - beta)."""
    return f.compose(Poly([alpha0, -1], f.var))


def to_h_poly(f: Poly, m: ModelParams) -> Poly:
    """Rewrite a flip-symmetric polynomial in beta as a polynomial in h."""
    if flip(f, m.alpha0) != f:
        raise NotSymmetric("polynomial is not invariant under beta -> alpha_0 - beta")
    u = Poly([0, -m.alpha0, 1])  # beta (beta - alpha_0) = 2h
    coeffs = []
    rest = f
    while not rest.is_zero():
        rest, rem = rest.divmod(u)
        if rem.degree > 0:
            raise NotSymmetric("non-constant remainder modulo beta(beta - alpha_0)")
        coeffs.append(rem.c[0] if rem.c else 0)
    out = []
    for k, a in enumerate(coeffs):
        a = a * 2**k
        if isinstance(a, QuadScalar):
            if not a.is_rational():
                raise NotSymmetric(f"irrational h-coefficient {a}")
            a = a.to_rational()
        out.append(Fraction(a))
    return HPoly(out)


# ---------------------------------------------------------------------------
# g polynomials and their root patterns
# ---------------------------------------------------------------------------


def expected_roots(m: ModelParams, i: int) -> Counter:
    """Root multiset of g_i predicted by the Kac table and the Delta^{+-}_{.;0} grids."""
    pp, pm = m.p_plus, m.p_minus
    kac = kac_table(m).deltas()
    plus = lambda r, s: extended_weight(m, "+", r, s, 0).delta
    minus = lambda r, s: extended_weight(m, "-", r, s, 0).delta
    grid = [(r, s) for r in range(1, pp) for s in range(1, pm)]
    col = [(r, pm) for r in range(1, pp)]
    row = [(pp, s) for s in range(1, pm)]
    roots: Counter = Counter()
    if i == 0:
        roots.update({d: 1 for d in kac})
        return roots
    if i == 1:
        for d in kac:
            roots[d] += 4
        for rs in grid + col + row:
            roots[plus(*rs)] += 2
        roots[plus(pp, pm)] += 1
        return roots
    if i == 2:
        for d in kac:
            roots[d] += 3
        for rs in grid + col + row:
            roots[plus(*rs)] += 2
            roots[minus(*rs)] += 1
        roots[plus(pp, pm)] += 1
        roots[minus(pp, pm)] += 1
        return roots
    raise OutOfRange(f"no root pattern for g_{i}")


def root_multiset(g: Poly, candidates: Iterable[Fraction]) -> tuple[Counter, Poly]:
    """Exact multiplicity of each candidate root, and the cofactor left over."""
    found: Counter = Counter()
    rest = g
    for r in sorted(set(candidates)):
        lin = HPoly([-r, 1])
        while rest.degree >= 1:
            q, rem = rest.divmod(lin)
            if not rem.is_zero():
                break
            rest = q
            found[r] += 1
    return found, rest


@dataclass(frozen=True)
class GPolys:
    g0: Poly
    g1: Poly
    g2: Poly
    certificates: tuple[Certificate, ...]

    def __iter__(self):
        return iter((self.g0, self.g1, self.g2))


def factorization_certificate(m: ModelParams, i: int, g: Poly, strict: bool = False) -> Certificate:
    want = expected_roots(m, i)
    got, rest = root_multiset(g, want)
    missing = {str(r): want[r] - got[r] for r in want if got[r] < want[r]}
    extra = {str(r): got[r] - want[r] for r in got if got[r] > want[r]}
    leftover = rest.degree
    passed = not missing and not extra and leftover == 0
    cert = Certificate(
        name=f"g{i}{m}",
        lhs={str(r): k for r, k in sorted(got.items())},
        rhs={str(r): k for r, k in sorted(want.items())},
        passed=passed,
        detail={"degree": g.degree, "leading_constant": str(rest.lead), "leftover_degree": leftover},
    )
    if strict and not passed:
        raise FactorizationMismatch(f"g_{i} root pattern differs at {m}", missing, extra)
    return cert


@lru_cache(maxsize=None)
def g_poly(m: ModelParams, i: int) -> Poly:
    if i == 0:
        return to_h_poly(omega_closed(m, 0), m)
    if i == 1:
        w1 = omega_closed(m, 1)
        return to_h_poly(w1 * w1, m)
    if i == 2:
        return to_h_poly(omega_closed(m, 2), m)
    raise OutOfRange(f"g_{i} is not defined here")


def g_polys(m: ModelParams, strict: bool = True) -> GPolys:
    """g_0, g_1 = omega_1^2 and g_2 as polynomials in h, each with its root-pattern certificate."""
    gs = [g_poly(m, i) for i in range(3)]
    certs = tuple(factorization_certificate(m, i, g, strict) for i, g in enumerate(gs))
    return GPolys(gs[0], gs[1], gs[2], certs)


# ---------------------------------------------------------------------------
# zero-mode algebra relations
# ---------------------------------------------------------------------------

# Coefficients live in Q[f, g] with f, g commuting symbols standing for
# f([T]) and g_1([T]); a coefficient is {(i, j): c} meaning sum c f^i g^j.
GENS = ("W-", "W0", "W+")
BASIS = ("1",) + GENS


def _cadd(x: dict, y: dict, s=1) -> dict:
    out = dict(x)
    for k, v in y.items():
        out[k] = out.get(k, 0) + s * v
    return {k: v for k, v in out.items() if v != 0}


def _cmul(x: dict, y: dict) -> dict:
    out: dict = {}
    for (a, b), u in x.items():
        for (c, d), v in y.items():
            k = (a + c, b + d)
            out[k] = out.get(k, 0) + u * v
    return {k: v for k, v in out.items() if v != 0}


ONE = {(0, 0): 1}


# products of generators: (x, y) -> {basis: coeff}
PRODUCT_TABLE: dict[tuple[str, str], dict[str, dict]] = {
    ("W-", "W-"): {},
    ("W-", "W0"): {"W-": {(1, 0): -1}},
    ("W-", "W+"): {"1": {(0, 1): -1}, "W0": {(1, 0): -1}},
    ("W0", "W-"): {"W-": {(1, 0): 1}},
    ("W0", "W0"): {"1": {(0, 1): 1}},
    ("W0", "W+"): {"W+": {(1, 0): -1}},
    ("W+", "W-"): {"1": {(0, 1): -1}, "W0": {(1, 0): 1}},
    ("W+", "W0"): {"W+": {(1, 0): 1}},
    ("W+", "W+"): {},
}

COMMUTATORS: dict[tuple[str, str], dict[str, dict]] = {
    ("W0", "W+"): {"W+": {(1, 0): -2}},
    ("W0", "W-"): {"W-": {(1, 0): 2}},
    ("W+", "W-"): {"W0": {(1, 0): 2}},
}


def _vadd(x: dict, y: dict, s=1) -> dict:
    out = dict(x)
    for k, v in y.items():
        out[k] = _cadd(out.get(k, {}), v, s)
    return {k: v for k, v in out.items() if v}


def zhu_multiply(x: dict, y: dict) -> dict:
    """Product of two elements of the Q[f,g]-span of 1, W-, W0, W+ using the table."""
    out: dict = {}
    for bx, cx in x.items():
        for by, cy in y.items():
            c = _cmul(cx, cy)
            if bx == "1":
                term = {by: c}
            elif by == "1":
                term = {bx: c}
            else:
                term = {b: _cmul(c, v) for b, v in PRODUCT_TABLE[(bx, by)].items()}
            out = _vadd(out, term)
    return out


def _reduce_f2(c: dict) -> dict:
    """Substitute g = f^2."""
    out: dict = {}
    for (a, b), v in c.items():
        k = (a + 2 * b, 0)
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v != 0}


def _coeff_str(c: dict) -> str:
    if not c:
        return "0"
    parts = []
    for (a, b), v in sorted(c.items()):
        mono = "*".join(x for x in (f"f^{a}" if a > 1 else "f" if a else "", f"g^{b}" if b > 1 else "g" if b else "") if x)
        parts.append(f"{v}" + (f"*{mono}" if mono else ""))
    return " + ".join(parts)


def elt_str(x: dict) -> str:
    if not x:
        return "0"
    return " + ".join(f"({_coeff_str(c)})" + ("" if b == "1" else f"[{b}]") for b, c in sorted(x.items()))


@dataclass(frozen=True)
class ZhuTable:
    products: dict
    commutators: dict
    probes: dict  # (x, y, z) -> (xy)z - x(yz)
    constraints: tuple[str, ...]
    f_degree_bound: Fraction

    def product(self, x: str, y: str) -> dict:
        return self.products[(x, y)]

    def to_json(self) -> dict:
        return {
            "products": {f"{x}*{y}": elt_str(v) for (x, y), v in self.products.items()},
            "commutators": {f"[{x},{y}]": elt_str(v) for (x, y), v in self.commutators.items()},
            "constraints": list(self.constraints),
            "deg_f_less_than": str(self.f_degree_bound),
        }


def zhu_table(m: ModelParams, f_degree: int | None = None) -> ZhuTable:
    """The product table with f formal, its commutators, and all triple associativity probes.

    Every probe must vanish once g_1 is replaced by f^2; anything else is a
    structural inconsistency of the table.
    """
    bound = Fraction(delta_n(m, 1), 2)
    if f_degree is not None and not f_degree < bound:
        raise OutOfRange(f"deg f = {f_degree} must be < Delta_1/2 = {bound}")
    gen = {b: {b: ONE} for b in GENS}
    products = {k: dict(v) for k, v in PRODUCT_TABLE.items()}
    commutators = {}
    for (x, y), want in COMMUTATORS.items():
        got = _vadd(zhu_multiply(gen[x], gen[y]), zhu_multiply(gen[y], gen[x]), -1)
        if got != want:
            raise InconsistentTable(f"[{x},{y}] = {elt_str(got)}, expected {elt_str(want)}")
        commutators[(x, y)] = got
    probes = {}
    constraints = set()
    for x in GENS:
        for y in GENS:
            for z in GENS:
                left = zhu_multiply(zhu_multiply(gen[x], gen[y]), gen[z])
                right = zhu_multiply(gen[x], zhu_multiply(gen[y], gen[z]))
                diff = _vadd(left, right, -1)
                probes[(x, y, z)] = diff
                for b, c in diff.items():
                    if _reduce_f2(c):
                        raise InconsistentTable(f"({x}{y}){z} - {x}({y}{z}) = {elt_str(diff)} does not vanish at g = f^2")
                    if min(c.items())[1] < 0:
                        c = {k: -v for k, v in c.items()}
                    constraints.add(f"({_coeff_str(c)})[{b}] = 0" if b != "1" else f"{_coeff_str(c)} = 0")
    return ZhuTable(products, commutators, probes, tuple(sorted(constraints)), bound)


# ---------------------------------------------------------------------------
# simple modules
# ---------------------------------------------------------------------------

KINDS = ("minimal", "Xplus", "Xminus")


@dataclass(frozen=True)
class SimpleModuleDescriptor:
    kind: str
    rs: tuple[int, int]
    delta: Fraction
    dim: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "rs": list(self.rs), "delta": str(self.delta), "dim": self.dim}


def simple_census(m: ModelParams) -> list[SimpleModuleDescriptor]:
    out = [SimpleModuleDescriptor("minimal", c.rs, c.delta, 1) for c in kac_table(m).classes]
    for kind, sign, dim in (("Xplus", "+", 1), ("Xminus", "-", 2)):
        for r in range(1, m.p_plus + 1):
            for s in range(1, m.p_minus + 1):
                out.append(SimpleModuleDescriptor(kind, (r, s), extended_weight(m, sign, r, s, 0).delta, dim))
    return out


def census_count(m: ModelParams) -> int:
    return (m.p_plus - 1) * (m.p_minus - 1) // 2 + 2 * m.p_plus * m.p_minus


# 2x2 matrices as nested tuples; 1x1 as ((x,),)


def _mm(a, b):
    n, k, p = len(a), len(b), len(b[0])
    return tuple(tuple(sum((a[i][t] * b[t][j] for t in range(k)), 0 * a[0][0]) for j in range(p)) for i in range(n))


def _madd(a, b, s=1):
    return tuple(tuple(x + s * y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _mscale(a, c):
    return tuple(tuple(x * c for x in row) for row in a)


def _eye(n, one):
    return tuple(tuple(one if i == j else 0 * one for j in range(n)) for i in range(n))


def _is_zero_matrix(a) -> bool:
    return all(x == 0 for row in a for x in row)


@dataclass(frozen=True)
class ZhuRep:
    delta: Fraction
    dim: int
    phi: QuadScalar  # value of f([T]) on the module; phi^2 = g_1(delta)
    T: tuple
    W: dict  # "W-", "W0", "W+" -> matrix

    def to_json(self) -> dict:
        enc = lambda a: [[scalar_to_json(x) for x in row] for row in a]
        return {
            "delta": str(self.delta),
            "dim": self.dim,
            "phi": scalar_to_json(self.phi),
            "T": enc(self.T),
            "W": {k: enc(v) for k, v in self.W.items()},
        }


def build_rep(m: ModelParams, d: SimpleModuleDescriptor, delta=None) -> ZhuRep:
    """Matrices of [T] and [W_{1,m}] on the lowest-weight space of d (delta overrides its weight)."""
    delta = d.delta if delta is None else Fraction(delta)
    g1 = g_poly(m, 1)(delta)
    if d.kind in ("minimal", "Xplus"):
        one = QuadScalar(1, 0, 1)
        zero = ((0 * one,),)
        return ZhuRep(delta, 1, 0 * one, ((one * delta,),), {b: zero for b in GENS})
    phi = QuadScalar.sqrt(g1)
    one = QuadScalar(1, 0, phi.D)
    z = 0 * one
    T = _mscale(_eye(2, one), delta)
    # basis (v_+, v_-), v_- = [W_{1,-1}] v_+
    W = {
        "W0": ((-phi, z), (z, phi)),
        "W-": ((z, z), (one, z)),
        "W+": ((z, -2 * phi * phi), (z, z)),
    }
    return ZhuRep(delta, 2, phi, T, W)


def _coeff_value(c: dict, f, g):
    acc = 0
    for (a, b), v in c.items():
        acc = acc + v * f**a * g**b
    return acc


def _represent(rep: ZhuRep, x: dict, g1):
    one = _eye(rep.dim, rep.T[0][0] * 0 + 1)
    acc = _mscale(one, 0)
    for b, c in x.items():
        mat = one if b == "1" else rep.W[b]
        acc = _madd(acc, _mscale(mat, _coeff_value(c, rep.phi, g1)))
    return acc


def rep_check(m: ModelParams, d: SimpleModuleDescriptor, delta=None, strict: bool = False) -> Certificate:
    """Verify the zero-mode relations on the lowest-weight space of a simple module.

    Checks that [T] is central, g_2([T]) = 0, [W_{1,0}]^2 = g_1([T]) and every
    entry of the product table, with f([T]) acting as the scalar phi.
    """
    rep = build_rep(m, d, delta)
    g1 = g_poly(m, 1)(rep.delta)
    g2 = g_poly(m, 2)(rep.delta)
    failures = []
    if g2 != 0:
        failures.append(f"g_2([T]) = {g2} != 0")
    for b, mat in rep.W.items():
        if not _is_zero_matrix(_madd(_mm(rep.T, mat), _mm(mat, rep.T), -1)):
            failures.append(f"[T] does not commute with [{b}]")
    for (x, y), entry in PRODUCT_TABLE.items():
        lhs = _mm(rep.W[x], rep.W[y])
        rhs = _represent(rep, entry, g1)
        if not _is_zero_matrix(_madd(lhs, rhs, -1)):
            failures.append(f"[{x}][{y}] = {elt_str(entry)}")
    cert = Certificate(
        name=f"rep{m}:{d.kind}{d.rs}",
        lhs=str(rep.delta),
        rhs=failures,
        passed=not failures,
        detail={"dim": rep.dim, "phi^2": str(g1)},
    )
    if strict and failures:
        raise RelationViolated(failures[0], f"module {d.kind}{d.rs} at delta {rep.delta}")
    return cert
