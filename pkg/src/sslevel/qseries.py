"""Truncated Laurent series in q with exact rational coefficients.

A :class:`QSeries` stores the coefficients of ``q^v, q^(v+1), ..., q^(P-1)``
where ``v`` is the valuation and ``P`` the (exclusive) precision. Every
coefficient below ``P`` is trusted; nothing is known beyond it.

Coefficients are Python ``int`` or :class:`fractions.Fraction`; integral
fractions are collapsed to ``int`` so that the common case of integral
q-expansions stays on the fast integer path.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from numbers import Rational

from .errors import (
    DivisionByZeroSeries,
    InsufficientPrecision,
    NonIntegralValuation,
    ParseError,
    UsageError,
)

__all__ = [
    "QSeries",
    "EtaQuotientSpec",
    "parse_eta_spec",
    "eta_quotient",
    "eisenstein",
    "kz_series",
    "bernoulli",
    "binomial",
    "divisor_sigma",
]


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class QSeries:
    """Immutable truncated Laurent series ``sum c_n q^n + O(q^precision)``."""

    __slots__ = ("_val", "_coeffs", "_prec")

    def __init__(self, valuation: int, coefficients, precision: int | None = None):
        coeffs = [_norm(c) for c in coefficients]
        if precision is None:
            precision = valuation + len(coeffs)
        if precision <= valuation:
            raise InsufficientPrecision(
                f"precision {precision} does not exceed valuation {valuation}"
            )
        n = precision - valuation
        if len(coeffs) < n:
            coeffs.extend([0] * (n - len(coeffs)))
        elif len(coeffs) > n:
            del coeffs[n:]
        # raise the valuation past leading zeros, keeping at least one slot
        k = 0
        while k < n - 1 and coeffs[k] == 0:
            k += 1
        if k and coeffs[k] != 0:
            valuation += k
            del coeffs[:k]
        self._val = valuation
        self._coeffs = tuple(coeffs)
        self._prec = precision

    # construction helpers
    @classmethod
    def constant(cls, c, precision: int) -> "QSeries":
        return cls(0, [c], precision)

    @classmethod
    def monomial(cls, c, exponent: int, precision: int) -> "QSeries":
        return cls(exponent, [c], precision)

    # accessors
    @property
    def valuation(self) -> int:
        return self._val

    @property
    def precision(self) -> int:
        return self._prec

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def __getitem__(self, n: int):
        if n >= self._prec:
            raise InsufficientPrecision(f"coefficient q^{n} is beyond precision {self._prec}")
        if n < self._val:
            return 0
        return self._coeffs[n - self._val]

    def items(self):
        """Yield ``(exponent, coefficient)`` for the nonzero coefficients."""
        for i, c in enumerate(self._coeffs):
            if c:
                yield self._val + i, c

    def leading_coefficient(self):
        if self.is_zero():
            raise DivisionByZeroSeries("zero series has no leading coefficient")
        return self._coeffs[0]

    def truncate(self, precision: int) -> "QSeries":
        if precision > self._prec:
            raise InsufficientPrecision(
                f"cannot extend precision {self._prec} to {precision}"
            )
        if precision <= self._val:
            raise InsufficientPrecision(
                f"truncation to {precision} leaves nothing above valuation {self._val}"
            )
        return QSeries(self._val, self._coeffs[: precision - self._val], precision)

    def shift(self, k: int) -> "QSeries":
        """Multiply by ``q^k``."""
        return QSeries(self._val + k, self._coeffs, self._prec + k)

    def map_coefficients(self, fn) -> "QSeries":
        return QSeries(self._val, [fn(c) for c in self._coeffs], self._prec)

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, QSeries):
            return other
        if isinstance(other, Rational):
            return QSeries.constant(other, max(self._prec, 1))
        return NotImplemented

    def __neg__(self):
        return QSeries(self._val, [-c for c in self._coeffs], self._prec)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prec = min(self._prec, other._prec)
        val = min(self._val, other._val)
        if prec <= val:
            raise InsufficientPrecision("sum has no trusted coefficients")
        out = [0] * (prec - val)
        for s in (self, other):
            for i, c in enumerate(s._coeffs):
                e = s._val + i
                if e >= prec:
                    break
                out[e - val] += c
        return QSeries(val, out, prec)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return QSeries(self._val, [c * other for c in self._coeffs], self._prec)
        if not isinstance(other, QSeries):
            return NotImplemented
        val = self._val + other._val
        prec = min(self._prec + other._val, other._prec + self._val)
        n = prec - val
        if n <= 0:
            raise InsufficientPrecision("product has no trusted coefficients")
        a = self._coeffs[:n]
        b = other._coeffs[:n]
        return QSeries(val, _convolve(a, b, n), prec)

    __rmul__ = __mul__

    def inverse(self) -> "QSeries":
        """Reciprocal by Laurent-series long division."""
        if self.is_zero():
            raise DivisionByZeroSeries("series vanishes to its precision")
        a = self._coeffs
        n = len(a)
        a0 = a[0]
        inv0 = _norm(1 / Fraction(a0))
        out = [inv0]
        for k in range(1, n):
            s = 0
            for i in range(1, k + 1):
                if a[i]:
                    s += a[i] * out[k - i]
            out.append(_norm(-s * inv0))
        return QSeries(-self._val, out, n - self._val)

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise DivisionByZeroSeries("division by the rational zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, QSeries):
            return NotImplemented
        if other.is_zero():
            raise DivisionByZeroSeries("divisor vanishes to its precision")
        # relative precision of the quotient is the smaller relative precision
        rel = min(self._prec - self._val, other._prec - other._val)
        return _long_divide(self, other, rel)

    def __rtruediv__(self, other):
        if isinstance(other, Rational):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int) -> "QSeries":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QSeries.constant(1, self._prec - self._val)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        if self._prec != other._prec:
            return False
        lo = min(self._val, other._val)
        return all(self[e] == other[e] for e in range(lo, self._prec))

    def __hash__(self):
        return hash((self._prec, tuple(self.items())))

    def agrees_with(self, other: "QSeries") -> bool:
        """True if both series coincide up to the smaller precision."""
        prec = min(self._prec, other._prec)
        lo = min(self._val, other._val)
        return all(self[e] == other[e] for e in range(lo, prec))

    def __repr__(self):
        return f"QSeries({self.format(8)})"

    def format(self, terms: int | None = None, var: str = "q") -> str:
        parts = []
        for e, c in self.items():
            if terms is not None and len(parts) >= terms:
                break
            parts.append(_format_term(c, e, var))
        body = " ".join(parts).lstrip("+ ").strip() if parts else "0"
        if body.startswith("- "):
            body = "-" + body[2:]
        return f"{body} + O({var}^{self._prec})"


def _format_term(c, e, var):
    sign = "-" if c < 0 else "+"
    mag = -c if c < 0 else c
    if e == 0:
        body = str(mag)
    else:
        mono = var if e == 1 else f"{var}^{e}"
        body = mono if mag == 1 else f"{mag}*{mono}"
    return f"{sign} {body}"


def _convolve(a, b, n):
    """First ``n`` coefficients of the product of coefficient sequences."""
    out = [0] * n
    nb = len(b)
    for i, ai in enumerate(a):
        if not ai or i >= n:
            continue
        lim = min(nb, n - i)
        for j in range(lim):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def _long_divide(a: QSeries, b: QSeries, rel: int) -> QSeries:
    val = a.valuation - b.valuation
    if rel <= 0:
        raise InsufficientPrecision("quotient has no trusted coefficients")
    num = list(a.coefficients[:rel]) + [0] * max(0, rel - len(a.coefficients))
    den = b.coefficients
    d0 = den[0]
    out = []
    for k in range(rel):
        s = num[k]
        for i in range(1, min(k, len(den) - 1) + 1):
            if den[i]:
                s -= den[i] * out[k - i]
        if d0 == 1 or d0 == -1:
            out.append(s * d0)
            continue
        q = Fraction(s, d0) if isinstance(s, int) and isinstance(d0, int) else Fraction(s) / d0
        out.append(_norm(q))
    return QSeries(val, out, val + rel)


# eta quotients

@dataclass(frozen=True)
class EtaQuotientSpec:
    """``prod eta(n*tau)^d`` over the ``(n, d)`` pairs in ``factors``."""

    factors: tuple

    def __post_init__(self):
        facs = tuple((int(n), int(d)) for n, d in self.factors)
        if not facs:
            raise UsageError("an eta quotient needs at least one factor")
        ns = [n for n, _ in facs]
        if any(n <= 0 for n in ns):
            raise UsageError("eta multipliers must be positive")
        if any(x >= y for x, y in zip(ns, ns[1:])):
            raise UsageError("eta multipliers must be strictly increasing")
        object.__setattr__(self, "factors", facs)

    @classmethod
    def from_pairs(cls, pairs) -> "EtaQuotientSpec":
        """Merge repeated multipliers and sort."""
        acc: dict[int, int] = {}
        for n, d in pairs:
            acc[int(n)] = acc.get(int(n), 0) + int(d)
        return cls(tuple(sorted(acc.items())))

    @property
    def weight_numerator(self) -> int:
        """``sum n*d``; the q-valuation is this divided by 24."""
        return sum(n * d for n, d in self.factors)

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(d for _, d in self.factors), 2)

    def valuation(self) -> int:
        s = self.weight_numerator
        if s % 24:
            raise NonIntegralValuation(
                f"sum n*d = {s} is not divisible by 24 for {self}"
            )
        return s // 24

    def __mul__(self, other: "EtaQuotientSpec") -> "EtaQuotientSpec":
        return EtaQuotientSpec.from_pairs(self.factors + other.factors)

    def __pow__(self, k: int) -> "EtaQuotientSpec":
        return EtaQuotientSpec(tuple((n, d * k) for n, d in self.factors))

    def inverse(self) -> "EtaQuotientSpec":
        return self ** -1

    def __str__(self):
        num = [f"{n}^{d}" for n, d in self.factors if d > 0]
        den = [f"{n}^{-d}" for n, d in self.factors if d < 0]
        s = "*".join(num) or "1^0"
        if den:
            s += "/" + "*".join(den)
        return s


_FACTOR = re.compile(r"^(\d+)(?:\^(-?\d+))?$")


def parse_eta_spec(text: str) -> EtaQuotientSpec:
    """Parse ``"1^24/2^24"``, ``"2^8*3^4/1^4*6^8"``, ``"1/25"`` and similar."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty eta-quotient specification")
    halves = s.split("/")
    if len(halves) > 2:
        raise ParseError(f"more than one '/' in {text!r}")
    pairs = []
    for sign, half in zip((1, -1), halves):
        if not half:
            raise ParseError(f"empty side of '/' in {text!r}")
        for tok in half.split("*"):
            m = _FACTOR.match(tok)
            if not m:
                raise ParseError(f"bad eta factor {tok!r} in {text!r}")
            n = int(m.group(1))
            d = int(m.group(2)) if m.group(2) is not None else 1
            if n == 0:
                raise ParseError("eta multiplier 0 is meaningless")
            pairs.append((n, sign * d))
    return EtaQuotientSpec.from_pairs(pairs)


@lru_cache(maxsize=None)
def divisor_sigma(n: int, k: int = 1) -> int:
    return sum(d**k for d in _divisors(n))


def _divisors(n: int):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def eta_quotient(spec: EtaQuotientSpec | str, precision: int) -> QSeries:
    """q-expansion of ``prod eta(n*tau)^d`` up to ``O(q^precision)``.

    Uses the logarithmic derivative: with ``F = prod_n prod_k (1-q^(nk))^d``,
    ``m*F_m = sum_{j=1..m} c_j F_{m-j}`` where
    ``c_j = -sum_{n | j} d*n*sigma(j/n)``.  Everything stays in the integers.
    """
    if isinstance(spec, str):
        spec = parse_eta_spec(spec)
    v = spec.valuation()
    if precision <= v:
        raise InsufficientPrecision(
            f"precision {precision} does not exceed the valuation {v} of {spec}"
        )
    n = precision - v
    c = [0] * n
    for mult, d in spec.factors:
        if d == 0:
            continue
        for j in range(mult, n, mult):
            c[j] -= d * mult * divisor_sigma(j // mult)
    f = [1] + [0] * (n - 1)
    for m in range(1, n):
        s = 0
        for j in range(1, m + 1):
            if c[j]:
                s += c[j] * f[m - j]
        q, r = divmod(s, m)
        if r:
            raise AssertionError("eta recurrence produced a non-integer")  # pragma: no cover
        f[m] = q
    return QSeries(v, f, precision)


# Bernoulli numbers and Eisenstein series

_BERNOULLI = [Fraction(1), Fraction(-1, 2)]
_BERNOULLI_LOCK = threading.Lock()


def _bernoulli_upto(k: int) -> list:
    # grow-only table; the lock keeps concurrent extension consistent
    with _BERNOULLI_LOCK:
        b = _BERNOULLI
        while len(b) <= k:
            m = len(b)
            if m % 2:
                b.append(Fraction(0))
                continue
            s = sum(comb(m + 1, j) * b[j] for j in range(m) if b[j])
            b.append(-s / (m + 1))
        return b


def bernoulli(k: int) -> Fraction:
    """k-th Bernoulli number (``B_1 = -1/2`` convention) for even ``k >= 0``."""
    if k < 0 or k % 2:
        raise UsageError(f"bernoulli expects an even k >= 0, got {k}")
    return _bernoulli_upto(k)[k]


def binomial(s, n: int):
    """Generalized binomial ``s(s-1)...(s-n+1)/n!`` with exact arithmetic."""
    if n < 0:
        return 0
    num = Fraction(1)
    for i in range(n):
        num *= Fraction(s) - i
    out = num / _factorial(n)
    return _norm(out)


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def eisenstein(k: int, precision: int) -> QSeries:
    """Normalized ``E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n``."""
    if k < 4 or k % 2:
        raise UsageError(f"eisenstein expects even k >= 4, got {k}")
    if precision < 1:
        raise InsufficientPrecision("eisenstein needs precision >= 1")
    const = _norm(-Fraction(2 * k) / bernoulli(k))
    coeffs = [1] + [const * divisor_sigma(n, k - 1) for n in range(1, precision)]
    return QSeries(0, coeffs, precision)


def kz_terms(k: int):
    """Pairs ``(a, b)`` with ``4a + 6b = k``."""
    return [(a, (k - 4 * a) // 6) for a in range(k // 4 + 1) if (k - 4 * a) % 6 == 0]


def kz_coefficient(kind: str, k: int, a: int, b: int):
    """Scalar multiplying ``E_4^a E_6^b`` in ``G_k`` or ``H_k``."""
    s = _kz_exponent(kind, k)
    return _norm(binomial(s, a + b) * binomial(a + b, a) * (-3) ** a * 2**b)


def _kz_exponent(kind, k):
    kind = kind.upper()
    if kind == "G":
        return Fraction(-1, 2)
    if kind == "H":
        return Fraction(k, 2)
    raise UsageError(f"kz_series kind must be 'G' or 'H', got {kind!r}")


def kz_series(kind: str, k: int, precision: int) -> QSeries:
    """``G_k`` or ``H_k``: the ``X^k`` coefficient of ``(1 - 3E_4 X^4 + 2E_6 X^6)^s``.

    ``s = -1/2`` for ``G`` and ``s = k/2`` for ``H``.
    """
    if k % 2:
        raise UsageError(f"kz_series expects even k, got {k}")
    _kz_exponent(kind, k)
    terms = kz_terms(k)
    out = QSeries.constant(0, precision)
    if not terms:
        return out
    e4 = eisenstein(4, precision)
    e6 = eisenstein(6, precision)
    amax = max(a for a, _ in terms)
    bmax = max(b for _, b in terms)
    p4 = [QSeries.constant(1, precision)]
    for _ in range(amax):
        p4.append(p4[-1] * e4)
    p6 = [QSeries.constant(1, precision)]
    for _ in range(bmax):
        p6.append(p6[-1] * e6)
    for a, b in terms:
        coeff = kz_coefficient(kind, k, a, b)
        if coeff:
            out = out + (p4[a] * p6[b]) * coeff
    return out
