"""Jack symmetric functions P_lambda, Q_lambda = b_lambda P_lambda and their identities.

Normalization: <p_lam, p_mu>_kappa = delta z_lam kappa^len(lam); P_lam is
m_lam plus terms strictly lower in dominance and orthogonal to all other P_mu.

Two constructions are provided:

* ``gram_schmidt``: orthogonalize m_mu in increasing dominance order.  Works
  over any field, including the generic field Q(kappa).
* ``recursive``: solve the eigenvalue equation of the Laplace-Beltrami type
  operator one coefficient at a time.  Much cheaper at high degree and used
  wherever only a specialized kappa is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import scipy.special

from .certificate import Certificate
from .errors import GammaPole, LengthExceedsN, PoleAtKappa, SizeGuardExceeded
from .partitions import Partition, all_box_stats, conjugate, dominates, enumerate_partitions, n_statistic
from .scalars import EpsSeries, KappaFunction, QuadScalar
from .symfun import SymPoly, convert, eval_eps, m_to_p_coeffs, omega_endo, to_variables

GENERIC = "generic"


@dataclass(frozen=True)
class JackPair:
    lam: Partition
    P: SymPoly
    Q: SymPoly
    b: object
    kappa: object = GENERIC
    gs_norm: object = None  # <P, P> found by Gram-Schmidt, when that route was used

    def to_json(self) -> dict:
        from .scalars import scalar_to_json

        return {"lambda": list(self.lam), "P": self.P.to_json(), "Q": self.Q.to_json(), "b": scalar_to_json(self.b)}


def _kappa_value(kappa):
    if kappa is None or kappa == GENERIC:
        return KappaFunction.kappa()
    return Fraction(kappa) if isinstance(kappa, int) else kappa


def _is_zero(x) -> bool:
    return x == 0


def _check_denominator(den, kappa, what: str):
    if _is_zero(den) if not isinstance(den, EpsSeries) else not den.is_unit():
        raise PoleAtKappa(kappa, what)


# ---------------------------------------------------------------------------
# closed products
# ---------------------------------------------------------------------------


def b_lambda(lam, kappa=None):
    """prod over boxes (kappa a + l + 1) / (kappa a + l + kappa)."""
    k = _kappa_value(kappa)
    out = 1
    for a, leg, _, _ in all_box_stats(lam):
        den = k * a + leg + k
        _check_denominator(den, k, f"b_lambda denominator at {lam}")
        out = out * (k * a + leg + 1) / den
    return out if not isinstance(out, int) else Fraction(out)


def eval_P(lam, X, kappa=None):
    """epsilon_X(P_lam): prod (X + kappa a' - l') / (kappa a + l + 1)."""
    k = _kappa_value(kappa)
    out = 1
    for a, leg, ac, lc in all_box_stats(lam):
        den = k * a + leg + 1
        _check_denominator(den, k, f"evaluation denominator at {lam}")
        out = out * (X + k * ac - lc) / den
    return out if not isinstance(out, int) else Fraction(out)


def eval_Q(lam, X, kappa=None):
    """epsilon_X(Q_lam): prod (X + kappa a' - l') / (kappa a + l + kappa)."""
    k = _kappa_value(kappa)
    out = 1
    for a, leg, ac, lc in all_box_stats(lam):
        den = k * a + leg + k
        _check_denominator(den, k, f"evaluation denominator at {lam}")
        out = out * (X + k * ac - lc) / den
    return out if not isinstance(out, int) else Fraction(out)


# ---------------------------------------------------------------------------
# Gram-Schmidt
# ---------------------------------------------------------------------------


def revlex_increasing(parts: list[Partition]) -> list[Partition]:
    """Default linear extension: reverse of the enumeration order."""
    return list(reversed(parts))


def n_statistic_increasing(parts: list[Partition]) -> list[Partition]:
    """A second linear extension: larger n(lambda) is lower in dominance; ties broken colex."""
    return sorted(parts, key=lambda lam: (-n_statistic(lam), tuple(reversed(lam))))


ORDERS: dict[str, Callable[[list[Partition]], list[Partition]]] = {
    "revlex": revlex_increasing,
    "nstat": n_statistic_increasing,
}


@lru_cache(maxsize=64)
def _gram_matrix(d: int, kappa) -> dict[tuple[Partition, Partition], object]:
    # <m_lam, m_nu>, polynomial in kappa
    parts = enumerate_partitions(d)
    in_p = {lam: m_to_p_coeffs(lam) for lam in parts}
    weight = {}
    for rho in parts:
        z = 1
        for part in set(rho):
            c = rho.count(part)
            z *= part**c * math.factorial(c)
        weight[rho] = kappa ** len(rho) * z
    G = {}
    for i, lam in enumerate(parts):
        for nu in parts[i:]:
            acc = 0
            a, b = in_p[lam], in_p[nu]
            if len(a) > len(b):
                a, b = b, a
            for rho, c in a.items():
                other = b.get(rho)
                if other is not None:
                    acc = acc + weight[rho] * (c * other)
            G[lam, nu] = G[nu, lam] = acc
    return G


@lru_cache(maxsize=64)
def _gram_schmidt(d: int, kappa, order: str = "revlex") -> dict[Partition, tuple[dict, object]]:
    """{lam: (P_lam as m-coefficients, <P_lam, P_lam>)} for every lam of degree d."""
    G = _gram_matrix(d, kappa)
    seq = ORDERS[order](enumerate_partitions(d))
    done: list[tuple[Partition, dict, object]] = []
    out: dict[Partition, tuple[dict, object]] = {}
    for lam in seq:
        v: dict[Partition, object] = {lam: Fraction(1)}
        for mu, pm, norm in done:
            ip = 0
            for nu, c in pm.items():
                g = G[lam, nu]
                if g != 0:
                    ip = ip + g * c
            if ip == 0:
                continue
            coef = ip / norm
            for nu, c in pm.items():
                v[nu] = v.get(nu, 0) - coef * c
        v = {nu: c for nu, c in v.items() if c != 0}
        # v is orthogonal to every earlier P, so <v, v> = <v, m_lam>
        norm = 0
        for nu, c in v.items():
            norm = norm + G[lam, nu] * c
        if norm == 0:
            raise PoleAtKappa(kappa, f"Gram-Schmidt norm of {lam} vanishes")
        done.append((lam, v, norm))
        out[lam] = (v, norm)
    return out


# ---------------------------------------------------------------------------
# eigenvalue recursion
# ---------------------------------------------------------------------------


def _eigen(lam, kappa):
    return kappa * n_statistic(conjugate(lam)) - n_statistic(lam)


def _unsqueezes(mu: Partition):
    """Yield (nu, weight): nu arises from mu by undoing one squeeze of two parts."""
    L = len(mu)
    for i in range(L):
        for j in range(i + 1, L):
            a, b = mu[i], mu[j]
            low = min(a, b)
            for q in range(low):
                p = a + b - q
                parts = list(mu)
                parts[i], parts[j] = p, q
                yield Partition.from_parts(parts), p - q


def recursive_jack(lam, kappa) -> dict[Partition, object]:
    """m-coefficients of P_lam at a specific kappa by the eigenvalue recursion."""
    lam = Partition(lam)
    k = _kappa_value(kappa)
    below = [mu for mu in enumerate_partitions(lam.size) if dominates(lam, mu)]
    e_lam = _eigen(lam, k)
    u: dict[Partition, object] = {lam: Fraction(1)}
    for mu in below:  # revlex: every nu > mu is visited first
        if mu == lam:
            continue
        acc = 0
        for nu, w in _unsqueezes(mu):
            c = u.get(nu)
            if c is not None and c != 0:
                acc = acc + c * w
        if acc == 0:
            continue
        gap = e_lam - _eigen(mu, k)
        if gap == 0:
            raise PoleAtKappa(kappa, f"eigenvalues of {lam} and {mu} coincide")
        u[mu] = acc / gap
    return {mu: c for mu, c in u.items() if c != 0}


# ---------------------------------------------------------------------------
# public constructor
# ---------------------------------------------------------------------------

_CACHE: dict[tuple, JackPair] = {}


def jack(lam, kappa=None, method: str = "gram_schmidt", order: str = "revlex") -> JackPair:
    """Jack pair (P, Q, b) for lam at kappa (None for the generic parameter)."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    k = _kappa_value(kappa)
    key = (lam, k, method, order)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    gs_norm = None
    if method == "gram_schmidt":
        coeffs, gs_norm = _gram_schmidt(lam.size, k, order)[lam]
    elif method == "recursive":
        coeffs = recursive_jack(lam, k)
    else:
        raise ValueError(f"unknown method {method!r}")
    b = b_lambda(lam, k)
    P = SymPoly("m", coeffs)
    pair = JackPair(lam, P, P * b, b, GENERIC if kappa is None else kappa, gs_norm)
    _CACHE[key] = pair
    return pair


def jacks_of_degree(d: int, kappa=None, **kw) -> list[JackPair]:
    return [jack(lam, kappa, **kw) for lam in enumerate_partitions(d)]


def specialize_pair(pair: JackPair, kappa0) -> JackPair:
    """Substitute a value for the generic parameter; poles raise PoleAtKappa."""
    sp = lambda c: c.specialize(kappa0) if isinstance(c, KappaFunction) else c  # noqa: E731
    P = pair.P.map_coeffs(sp)
    b = sp(pair.b)
    return JackPair(pair.lam, P, P * b, b, kappa0, None if pair.gs_norm is None else sp(pair.gs_norm))


# ---------------------------------------------------------------------------
# identities
# ---------------------------------------------------------------------------


def norm_check(lam) -> Certificate:
    """Gram-Schmidt <P, P> against the closed product 1/b over generic kappa."""
    pair = jack(lam)
    lhs, rhs = pair.gs_norm, 1 / pair.b
    return Certificate(f"jack norm {Partition(lam)}", lhs, rhs, lhs == rhs)


def duality_check(lam) -> Certificate:
    """omega_kappa(P_lam(kappa)) == Q_lam'(1/kappa), over generic kappa."""
    lam = Partition(lam)
    k = KappaFunction.kappa()
    lhs = omega_endo(jack(lam).P, k)
    dual = jack(conjugate(lam))
    rhs = convert(dual.Q.map_coeffs(_reciprocal), "p")
    return Certificate(f"duality {lam}", lhs, rhs, lhs == rhs)


def _reciprocal(c):
    return c.at_reciprocal() if isinstance(c, KappaFunction) else c


def _tensor_mul(x: dict, y: dict) -> dict:
    out: dict = {}
    for (a1, b1), c1 in x.items():
        for (a2, b2), c2 in y.items():
            key = (Partition.from_parts(a1 + a2), Partition.from_parts(b1 + b2))
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v != 0}


@lru_cache(maxsize=None)
def _kernel_parts(d: int) -> dict:
    # degree-d part of exp(sum_k p_k (x) p_k / (k kappa)), using n E_n = sum_k k S_k E_{n-k}
    k = KappaFunction.kappa()
    if d == 0:
        return {(Partition(), Partition()): KappaFunction.const(1)}
    acc: dict = {}
    for j in range(1, d + 1):
        S_j = {(Partition((j,)), Partition((j,))): 1 / (j * k)}
        for key, c in _tensor_mul(S_j, _kernel_parts(d - j)).items():
            acc[key] = acc.get(key, 0) + c * j
    return {key: c / d for key, c in acc.items() if c != 0}


def cauchy_check(d: int) -> Certificate:
    """sum_{|lam|=d} P_lam(x) Q_lam(y) against the exponential kernel, in p (x) p."""
    lhs: dict = {}
    for pair in jacks_of_degree(d):
        Pp = convert(pair.P, "p").terms
        Qp = convert(pair.Q, "p").terms
        for a, ca in Pp.items():
            for b, cb in Qp.items():
                lhs[a, b] = lhs.get((a, b), 0) + ca * cb
    lhs = {key: c for key, c in lhs.items() if c != 0}
    rhs = _kernel_parts(d)
    return Certificate(f"cauchy degree {d}", lhs, rhs, lhs == rhs)


def eval_check(lam, X, kappa=None) -> Certificate:
    """Closed evaluation product against substitution into the constructed P."""
    lhs = eval_P(lam, X, kappa)
    rhs = eval_eps(convert(jack(lam, kappa).P, "p"), X)
    return Certificate(f"evaluation {Partition(lam)} at X={X}", lhs, rhs, lhs == rhs)


# ---------------------------------------------------------------------------
# finite N
# ---------------------------------------------------------------------------


def inner_N(lam, mu, N: int, kappa=None):
    """Closed form of the N-variable pairing (P_lam, P_mu)^N.

    prod over boxes (k a + l + k)(N + k a' - l') / ((k a + l + 1)(N + (a'+1) k - l' - 1)).
    The co-arm enters as k a', the same factor as in the evaluation formula;
    without the k the product disagrees with the constant-term oracle.
    """
    lam, mu = Partition(lam), Partition(mu)
    if len(lam) > N or len(mu) > N:
        raise LengthExceedsN(f"{lam} or {mu} has more than {N} parts")
    if lam != mu:
        return Fraction(0)
    k = _kappa_value(kappa)
    out = 1
    for a, leg, ac, lc in all_box_stats(lam):
        den = (k * a + leg + 1) * (N + (ac + 1) * k - lc - 1)
        _check_denominator(den, k, f"finite-N norm denominator at {lam}")
        out = out * (k * a + leg + k) * (N + k * ac - lc) / den
    return out if not isinstance(out, int) else Fraction(out)


def _laurent_mul(x: dict, y: dict) -> dict:
    out: dict = {}
    for e1, c1 in x.items():
        for e2, c2 in y.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c != 0}


@lru_cache(maxsize=None)
def _weight_function(N: int, k: int) -> dict:
    # prod_{i != j} (1 - z_i/z_j)^k; pair i<j combines to (2 - z_i/z_j - z_j/z_i)^k
    zero = (0,) * N
    out = {zero: 1}
    for i in range(N):
        for j in range(i + 1, N):
            up = [0] * N
            up[i], up[j] = 1, -1
            down = [-x for x in up]
            pair = {zero: 2, tuple(up): -1, tuple(down): -1}
            for _ in range(k):
                out = _laurent_mul(out, pair)
    return out


def ct_pairing(f: SymPoly, g: SymPoly, N: int, inv_kappa: int) -> Fraction:
    """Constant-term oracle for (f, g)^N at kappa = 1/inv_kappa, normalized so (1, 1) = 1."""
    if N > 4 or inv_kappa > 3 or N < 1 or inv_kappa < 1:
        raise SizeGuardExceeded(f"constant-term expansion limited to N <= 4, 1/kappa <= 3 (got {N}, {inv_kappa})")
    w = _weight_function(N, inv_kappa)
    fx = {tuple(-e for e in exps): c for exps, c in to_variables(f, N).items()}
    gx = to_variables(g, N)
    prod_fg = _laurent_mul(fx, gx)
    total = 0
    for e, c in prod_fg.items():
        coeff = w.get(tuple(-x for x in e))
        if coeff:
            total += c * coeff
    return Fraction(total) / w[(0,) * N]


# ---------------------------------------------------------------------------
# Selberg normalization (floating point)
# ---------------------------------------------------------------------------


def _is_pole(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


def selberg_constant(N: int, kappa: float) -> float:
    """c_N(kappa) = 1/(N-1)! prod_{i<N} Gamma((i-N)kappa) Gamma((i+1)kappa+1) / Gamma(kappa+1)."""
    if N < 1:
        raise ValueError("N must be positive")
    kappa = float(kappa)
    log_abs = -math.lgamma(N)
    sign = 1.0
    for i in range(1, N):
        for arg, power in (((i - N) * kappa, 1), ((i + 1) * kappa + 1, 1), (kappa + 1, -1)):
            if _is_pole(arg):
                raise GammaPole(f"Gamma has a pole at {arg}")
            log_abs += power * float(scipy.special.gammaln(arg))
            sign *= float(scipy.special.gammasgn(arg))
    return sign * math.exp(log_abs)
