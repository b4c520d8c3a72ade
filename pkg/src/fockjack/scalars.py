"""Exact scalar rings.

Four coefficient types share one duck-typed interface (+, -, *, /, ==, ** int,
comparison with 0):

* ``Fraction`` (aliased ``Rational``) for Q,
* :class:`QuadScalar` for Q(sqrt D),
* :class:`KappaFunction` for Q(kappa), rational functions in one indeterminate,
* :class:`EpsSeries` for truncated power series Q[[eps]]/(eps^K) over either of
  the first two.

Plain ``int`` and ``Fraction`` mix freely with all of them.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

from .errors import DiscriminantMismatch, DivisionByZero, NotAUnit, PoleAtKappa

Rational = Fraction

DEFAULT_EPS_ORDER = 8


def as_rational(x) -> Fraction:
    """Coerce int, Fraction or a 'p/q' string to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, QuadScalar):
        return x.to_rational()
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def _int_sqrt(n: int) -> int | None:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


_SQRT_CACHE: dict[Fraction, Fraction | None] = {}


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    x = Fraction(x)
    if x in _SQRT_CACHE:
        return _SQRT_CACHE[x]
    n, d = _int_sqrt(x.numerator), _int_sqrt(x.denominator)
    out = Fraction(n, d) if n is not None and d is not None else None
    _SQRT_CACHE[x] = out
    return out


# ---------------------------------------------------------------------------
# Q(sqrt D)
# ---------------------------------------------------------------------------


class QuadScalar:
    """The number a + b*sqrt(D) with a, b, D rational.

    When D is the square of a rational the value is folded into ``a`` and
    ``b`` is stored as 0, so every element has a unique representation.
    """

    __slots__ = ("a", "b", "D")

    def __init__(self, a=0, b=0, D=1):
        a = as_rational(a)
        b = as_rational(b)
        D = as_rational(D)
        if b:
            r = rational_sqrt(D)
            if r is not None:
                a, b = a + b * r, Fraction(0)
        self.a = a
        self.b = b
        self.D = D

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, D: Fraction) -> "QuadScalar":
        # caller guarantees canonical form
        obj = object.__new__(cls)
        obj.a = a
        obj.b = b
        obj.D = D
        return obj

    @classmethod
    def sqrt(cls, D, scale=1) -> "QuadScalar":
        """scale * sqrt(D)."""
        return cls(0, scale, D)

    # -- coercion -----------------------------------------------------------
    def _co(self, other) -> "QuadScalar | None":
        if isinstance(other, QuadScalar):
            if other.D == self.D:
                return other
            if other.b == 0:
                return QuadScalar._raw(other.a, other.b, self.D)
            if self.b == 0:
                return other
            raise DiscriminantMismatch(f"sqrt({self.D}) and sqrt({other.D}) live in different fields")
        if isinstance(other, (int, Fraction)):
            return QuadScalar._raw(Fraction(other), Fraction(0), self.D)
        return None

    def _ambient(self, other: "QuadScalar") -> Fraction:
        return self.D if self.b else other.D

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return QuadScalar._raw(self.a + o.a, self.b + o.b, self._ambient(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar._raw(-self.a, -self.b, self.D)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return QuadScalar._raw(self.a - o.a, self.b - o.b, self._ambient(o))

    def __rsub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        D = self._ambient(o)
        if not self.b:
            return QuadScalar._raw(self.a * o.a, self.a * o.b, D)
        if not o.b:
            return QuadScalar._raw(self.a * o.a, self.b * o.a, D)
        return QuadScalar._raw(self.a * o.a + self.b * o.b * D, self.a * o.b + self.b * o.a, D)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.D

    def conjugate(self) -> "QuadScalar":
        return QuadScalar._raw(self.a, -self.b, self.D)

    def inv(self) -> "QuadScalar":
        if not self.b:
            if not self.a:
                raise DivisionByZero("inverse of 0 in Q(sqrt D)")
            return QuadScalar._raw(1 / self.a, Fraction(0), self.D)
        n = self.norm()
        if not n:
            # only possible for D a non-square ... which canonical form excludes
            raise DivisionByZero(f"{self} has zero norm")
        return QuadScalar._raw(self.a / n, -self.b / n, self.D)

    def __truediv__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        out = QuadScalar._raw(Fraction(1), Fraction(0), self.D)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QuadScalar):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.a == other.a and self.b == other.b and self.D == other.D
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def to_rational(self) -> Fraction:
        if self.b:
            raise ValueError(f"{self} is irrational")
        return self.a

    def __repr__(self):
        if not self.b:
            return f"QuadScalar({self.a})"
        return f"QuadScalar({self.a} + {self.b}*sqrt({self.D}))"

    def __str__(self):
        if not self.b:
            return str(self.a)
        root = f"sqrt({self.D})"
        tail = root if self.b == 1 else f"-{root}" if self.b == -1 else f"{self.b}*{root}"
        if not self.a:
            return tail
        return f"{self.a} + {tail}" if self.b > 0 else f"{self.a} - {tail.lstrip('-')}"


# ---------------------------------------------------------------------------
# Univariate polynomials over Q, tuples with constant term first
# ---------------------------------------------------------------------------

Poly = tuple  # tuple[Fraction, ...], no trailing zeros

_ZERO: Poly = ()
_ONE: Poly = (Fraction(1),)


def _trim(c: list) -> Poly:
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def padd(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return _trim(out)


def pneg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def psub(p: Poly, q: Poly) -> Poly:
    return padd(p, pneg(q))


def pscale(p: Poly, c) -> Poly:
    if not c:
        return _ZERO
    return tuple(x * c for x in p)


def pmul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return _ZERO
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def pdivmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise DivisionByZero("polynomial division by zero")
    r = list(p)
    dq = len(q) - 1
    lead = q[-1]
    if len(r) - 1 < dq:
        return _ZERO, tuple(r)
    quo = [Fraction(0)] * (len(r) - dq)
    for k in range(len(r) - 1 - dq, -1, -1):
        c = r[k + dq] / lead
        quo[k] = c
        if c:
            for j in range(dq + 1):
                r[k + j] -= c * q[j]
    return _trim(quo), _trim(r[:dq])


def pmonic(p: Poly) -> Poly:
    if not p or p[-1] == 1:
        return p
    lead = p[-1]
    return tuple(c / lead for c in p)


def pgcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    while q:
        p, q = q, pdivmod(p, q)[1]
        q = pmonic(q) if q else q
    return pmonic(p)


def peval(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# Q(kappa)
# ---------------------------------------------------------------------------


class KappaFunction:
    """A reduced rational function num(kappa)/den(kappa) over Q, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Sequence = (), den: Sequence = (1,)):
        n = _trim([as_rational(c) for c in num])
        d = _trim([as_rational(c) for c in den])
        if not d:
            raise DivisionByZero("zero denominator")
        self.num, self.den = _reduce(n, d)

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "KappaFunction":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def kappa(cls) -> "KappaFunction":
        """The indeterminate itself."""
        return cls._raw((Fraction(0), Fraction(1)), _ONE)

    @classmethod
    def const(cls, c) -> "KappaFunction":
        c = as_rational(c)
        return cls._raw((c,) if c else _ZERO, _ONE)

    def _co(self, other):
        if isinstance(other, KappaFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return KappaFunction.const(other)
        return None

    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return KappaFunction._raw(*_reduce(padd(self.num, o.num), self.den))
        if o.den == _ONE:
            return KappaFunction._raw(padd(self.num, pmul(o.num, self.den)), self.den)
        if self.den == _ONE:
            return KappaFunction._raw(padd(pmul(self.num, o.den), o.num), o.den)
        g = pgcd(self.den, o.den)
        if g == _ONE:
            return KappaFunction._raw(
                *_reduce(padd(pmul(self.num, o.den), pmul(o.num, self.den)), pmul(self.den, o.den), coprime_den=True)
            )
        d1 = pdivmod(self.den, g)[0]
        d2 = pdivmod(o.den, g)[0]
        num = padd(pmul(self.num, d2), pmul(o.num, d1))
        return KappaFunction._raw(*_reduce(num, pmul(pmul(d1, d2), g)))

    __radd__ = __add__

    def __neg__(self):
        return KappaFunction._raw(pneg(self.num), self.den)

    def __sub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return KappaFunction._raw(_ZERO, _ONE)
            return KappaFunction._raw(pscale(self.num, Fraction(other)), self.den)
        o = self._co(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return KappaFunction._raw(_ZERO, _ONE)
        # cross-cancel before multiplying keeps the gcd work small
        g1 = pgcd(self.num, o.den)
        g2 = pgcd(o.num, self.den)
        n1, d2 = (pdivmod(self.num, g1)[0], pdivmod(o.den, g1)[0]) if g1 != _ONE else (self.num, o.den)
        n2, d1 = (pdivmod(o.num, g2)[0], pdivmod(self.den, g2)[0]) if g2 != _ONE else (o.num, self.den)
        num = pmul(n1, n2)
        den = pmul(d1, d2)
        lead = den[-1]
        if lead != 1:
            num, den = pscale(num, 1 / lead), pscale(den, 1 / lead)
        return KappaFunction._raw(num, den)

    __rmul__ = __mul__

    def inv(self) -> "KappaFunction":
        if not self.num:
            raise DivisionByZero("inverse of the zero rational function")
        lead = self.num[-1]
        return KappaFunction._raw(pscale(self.den, 1 / lead), pscale(self.num, 1 / lead))

    def __truediv__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inv()
        out = KappaFunction._raw(_ONE, _ONE)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.den == _ONE and len(self.num) <= 1:
            return hash(self.num[0] if self.num else Fraction(0))
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def specialize(self, kappa0):
        """Evaluate at kappa = kappa0; raises PoleAtKappa where den vanishes."""
        d = peval(self.den, kappa0)
        if d == 0:
            raise PoleAtKappa(kappa0)
        return peval(self.num, kappa0) / d

    __call__ = specialize

    def at_reciprocal(self) -> "KappaFunction":
        """f(1/kappa) as a rational function of kappa."""
        num = tuple(reversed(self.num))
        den = tuple(reversed(self.den))
        shift = (len(self.den) - 1) - (len(self.num) - 1)
        if shift >= 0:
            num = (Fraction(0),) * shift + num
        else:
            den = (Fraction(0),) * (-shift) + den
        return KappaFunction(num, den)

    def is_constant(self) -> bool:
        return self.den == _ONE and len(self.num) <= 1

    def __repr__(self):
        return f"KappaFunction({_pstr(self.num)}, {_pstr(self.den)})"

    def __str__(self):
        if self.den == _ONE:
            return _pstr(self.num)
        return f"({_pstr(self.num)})/({_pstr(self.den)})"


def _reduce(num: Poly, den: Poly, coprime_den: bool = False) -> tuple[Poly, Poly]:
    if not num:
        return _ZERO, _ONE
    # a/b + c/d with gcd(b, d) = 1 is already reduced, so skip the gcd then
    if len(den) > 1 and not coprime_den:
        g = pgcd(num, den)
        if g != _ONE:
            num = pdivmod(num, g)[0]
            den = pdivmod(den, g)[0]
    lead = den[-1]
    if lead != 1:
        num, den = pscale(num, 1 / lead), pscale(den, 1 / lead)
    return num, den


def _pstr(p: Poly, var: str = "k") -> str:
    if not p:
        return "0"
    parts = []
    for i, c in enumerate(p):
        if not c:
            continue
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        if mono and c == 1:
            parts.append(mono)
        elif mono and c == -1:
            parts.append(f"-{mono}")
        else:
            parts.append(f"{c}{'*' + mono if mono else ''}")
    return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# O / eps^K
# ---------------------------------------------------------------------------


class EpsSeries:
    """c_0 + c_1 eps + ... + c_{K-1} eps^{K-1}, arithmetic modulo eps^K."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = (), K: int | None = None):
        cs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        if K is None:
            K = len(cs) if cs else DEFAULT_EPS_ORDER
        if K < 1:
            raise ValueError("truncation order must be positive")
        cs = cs[:K] + [Fraction(0)] * (K - len(cs))
        self.coeffs = tuple(cs)

    @classmethod
    def eps(cls, K: int = DEFAULT_EPS_ORDER) -> "EpsSeries":
        if K < 2:
            return cls([0], K)
        return cls([0, 1], K)

    @classmethod
    def constant(cls, c, K: int = DEFAULT_EPS_ORDER) -> "EpsSeries":
        return cls([c], K)

    @property
    def K(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int):
        return self.coeffs[i]

    @property
    def constant_term(self):
        return self.coeffs[0]

    def is_unit(self) -> bool:
        return self.coeffs[0] != 0

    def _co(self, other):
        if isinstance(other, EpsSeries):
            return other
        if isinstance(other, (int, Fraction, QuadScalar)):
            return EpsSeries([other], self.K)
        return None

    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        K = min(self.K, o.K)
        return EpsSeries([self.coeffs[i] + o.coeffs[i] for i in range(K)], K)

    __radd__ = __add__

    def __neg__(self):
        return EpsSeries([-c for c in self.coeffs], self.K)

    def __sub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadScalar)):
            return EpsSeries([c * other for c in self.coeffs], self.K)
        o = self._co(other)
        if o is None:
            return NotImplemented
        K = min(self.K, o.K)
        a, b = self.coeffs, o.coeffs
        out = []
        for n in range(K):
            acc = 0
            for i in range(n + 1):
                if a[i] and b[n - i]:
                    acc = acc + a[i] * b[n - i]
            out.append(acc)
        return EpsSeries(out, K)

    __rmul__ = __mul__

    def inv(self) -> "EpsSeries":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise NotAUnit("constant term vanishes; the series is not invertible in O")
        K = self.K
        inv0 = 1 / c0
        out = [inv0]
        for n in range(1, K):
            acc = 0
            for i in range(1, n + 1):
                if self.coeffs[i]:
                    acc = acc + self.coeffs[i] * out[n - i]
            out.append(-acc * inv0)
        return EpsSeries(out, K)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, QuadScalar)):
            if other == 0:
                raise DivisionByZero("division of a series by 0")
            if isinstance(other, int):
                other = Fraction(other)
            return EpsSeries([c / other for c in self.coeffs], self.K)
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inv()
        out = EpsSeries([1], self.K)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        K = min(self.K, o.K)
        return all(self.coeffs[i] == o.coeffs[i] for i in range(K))

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(c != 0 for c in self.coeffs)

    def truncate(self, K: int) -> "EpsSeries":
        return EpsSeries(self.coeffs[:K], K)

    def map(self, fn) -> "EpsSeries":
        return EpsSeries([fn(c) for c in self.coeffs], self.K)

    def __repr__(self):
        return f"EpsSeries({[str(c) for c in self.coeffs]}, K={self.K})"


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def scalar_to_json(x):
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    if isinstance(x, QuadScalar):
        return {"a": str(x.a), "b": str(x.b), "D": str(x.D)}
    if isinstance(x, KappaFunction):
        return {"num": [str(c) for c in x.num] or ["0"], "den": [str(c) for c in x.den]}
    if isinstance(x, EpsSeries):
        return {"eps": [scalar_to_json(c) for c in x.coeffs], "K": x.K}
    raise TypeError(f"no JSON encoding for {type(x).__name__}")


def scalar_from_json(obj):
    if isinstance(obj, str):
        return Fraction(obj)
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, dict):
        if "eps" in obj:
            return EpsSeries([scalar_from_json(c) for c in obj["eps"]], obj["K"])
        if "num" in obj:
            return KappaFunction([Fraction(c) for c in obj["num"]], [Fraction(c) for c in obj["den"]])
        if "D" in obj:
            return QuadScalar(Fraction(obj["a"]), Fraction(obj["b"]), Fraction(obj["D"]))
    raise ValueError(f"unrecognised scalar encoding {obj!r}")


def to_quad(x, D) -> QuadScalar:
    if isinstance(x, QuadScalar):
        return x
    return QuadScalar(as_rational(x), 0, D)
