"""Dense univariate polynomials over Q and over F_p.

Both types store coefficients lowest degree first and are immutable.
:class:`PrimePoly` also carries the factorization machinery (distinct- and
equal-degree splitting) used to print supersingular polynomials in
factored form and to count their linear and quadratic factors.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from numbers import Rational

import numpy as np

from .errors import ParseError, PDividesDenominator, UsageError

__all__ = ["RationalPoly", "PrimePoly", "parse_poly", "is_prime", "primes_up_to"]


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _term_str(c, e, var, mult="*"):
    mag = abs(c)
    mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
    if e == 0:
        body = str(mag)
    elif mag == 1:
        body = mono
    else:
        body = f"{mag}{mult}{mono}"
    return ("-" if c < 0 else "+"), body


def _format_dense(coeffs, var):
    if not coeffs:
        return "0"
    out = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        sign, body = _term_str(c, e, var)
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


class RationalPoly:
    """Polynomial with exact rational coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coefficients=()):
        self._c = _strip(_norm(Fraction(c)) if not isinstance(c, int) else c for c in coefficients)

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "RationalPoly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots) -> "RationalPoly":
        out = cls((1,))
        for r in roots:
            out = out * cls((-r, 1))
        return out

    @property
    def coefficients(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def leading_coefficient(self):
        return self._c[-1] if self._c else 0

    def __getitem__(self, i):
        return self._c[i] if 0 <= i < len(self._c) else 0

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = RationalPoly((other,))
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"RationalPoly({self})"

    def __str__(self):
        return _format_dense(self._c, "x")

    def _lift(self, other):
        if isinstance(other, RationalPoly):
            return other
        if isinstance(other, Rational):
            return RationalPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self._c), len(other._c))
        return RationalPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly(-c for c in self._c)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return RationalPoly()
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise UsageError("negative powers of polynomials are not polynomials")
        out = RationalPoly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __divmod__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self._c]
        d = other.degree
        lc = Fraction(other.leading_coefficient())
        if len(rem) - 1 < d:
            return RationalPoly(), self
        quo = [Fraction(0)] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i] / lc
            quo[i - d] = c
            if c:
                for j, b in enumerate(other._c):
                    rem[i - d + j] -= c * b
        return RationalPoly(quo), RationalPoly(rem[:d])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "RationalPoly":
        if not self._c:
            return self
        lc = Fraction(self._c[-1])
        return RationalPoly(Fraction(c) / lc for c in self._c)

    def derivative(self) -> "RationalPoly":
        return RationalPoly(i * c for i, c in enumerate(self._c) if i)

    def gcd(self, other: "RationalPoly") -> "RationalPoly":
        """Monic gcd (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def radical(self) -> "RationalPoly":
        """Product of the distinct irreducible factors, made monic."""
        if self.degree <= 0:
            return RationalPoly((1,)) if not self.is_zero() else self
        return (self // self.gcd(self.derivative())).monic()

    def is_squarefree(self) -> bool:
        return self.gcd(self.derivative()).degree == 0

    def __call__(self, x):
        """Horner evaluation; works for numbers and for series."""
        if not self._c:
            return 0 * x
        acc = self._c[-1]
        for c in reversed(self._c[:-1]):
            acc = acc * x + c
        return acc

    def denominators(self):
        return [Fraction(c).denominator for c in self._c]

    def reduce_mod(self, p: int) -> "PrimePoly":
        """Image in ``F_p[x]``; refuses coefficients whose denominator p divides."""
        out = []
        for i, c in enumerate(self._c):
            c = Fraction(c)
            if c.denominator % p == 0:
                raise PDividesDenominator(
                    f"coefficient of x^{i} has denominator {c.denominator} divisible by {p}"
                )
            out.append(c.numerator * pow(c.denominator, -1, p) % p)
        return PrimePoly(p, out)


# polynomials over F_p

class PrimePoly:
    """Polynomial over the prime field ``F_p``."""

    __slots__ = ("p", "_c")

    def __init__(self, p: int, coefficients=()):
        self.p = p
        self._c = _strip(int(c) % p for c in coefficients)

    @classmethod
    def x(cls, p: int) -> "PrimePoly":
        return cls(p, (0, 1))

    @classmethod
    def from_roots(cls, p: int, roots) -> "PrimePoly":
        out = cls(p, (1,))
        for r in roots:
            out = out * cls(p, (-r, 1))
        return out

    @property
    def coefficients(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def leading_coefficient(self) -> int:
        return self._c[-1] if self._c else 0

    def __getitem__(self, i):
        return self._c[i] if 0 <= i < len(self._c) else 0

    def __eq__(self, other):
        if not isinstance(other, PrimePoly):
            return NotImplemented
        return self.p == other.p and self._c == other._c

    def __hash__(self):
        return hash((self.p, self._c))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        """Degree first, then coefficients from the top down."""
        return (self.degree, tuple(reversed(self._c)))

    def __repr__(self):
        return f"PrimePoly({self.p}, {self})"

    def __str__(self):
        return _format_dense(self._c, "x")

    def _lift(self, other):
        if isinstance(other, PrimePoly):
            if other.p != self.p:
                raise UsageError(f"mixing moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return PrimePoly(self.p, (other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self._c), len(other._c))
        return PrimePoly(self.p, (self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return PrimePoly(self.p, (-c for c in self._c))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return PrimePoly(self.p)
        if _use_numpy(self.p, len(self._c), len(other._c)):
            a = np.array(self._c, dtype=np.int64)
            b = np.array(other._c, dtype=np.int64)
            return PrimePoly(self.p, (np.convolve(a, b) % self.p).tolist())
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return PrimePoly(self.p, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = PrimePoly(self.p, (1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __divmod__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self._c)
        d = other.degree
        if len(rem) - 1 < d:
            return PrimePoly(p), self
        inv = pow(other._c[-1], -1, p)
        if _use_numpy(p, len(rem) - d, d + 1):
            return _divmod_numpy(rem, other._c, inv, p)
        quo = [0] * (len(rem) - d)
        oc = other._c
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i] * inv % p
            quo[i - d] = c
            if c:
                for j in range(d + 1):
                    rem[i - d + j] = (rem[i - d + j] - c * oc[j]) % p
        return PrimePoly(p, quo), PrimePoly(p, rem[:d])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "PrimePoly":
        if not self._c:
            return self
        inv = pow(self._c[-1], -1, self.p)
        return PrimePoly(self.p, (c * inv for c in self._c))

    def derivative(self) -> "PrimePoly":
        return PrimePoly(self.p, (i * c for i, c in enumerate(self._c) if i))

    def gcd(self, other: "PrimePoly") -> "PrimePoly":
        a, b = self, self._lift(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def powmod(self, k: int, modulus: "PrimePoly") -> "PrimePoly":
        """``self^k mod modulus`` by repeated squaring."""
        out = PrimePoly(self.p, (1,)) % modulus
        base = self % modulus
        while k:
            if k & 1:
                out = (out * base) % modulus
            k >>= 1
            if k:
                base = (base * base) % modulus
        return out

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self._c):
            acc = (acc * x + c) % self.p
        return acc

    def is_squarefree(self) -> bool:
        if self.degree <= 0:
            return True
        return self.gcd(self.derivative()).degree == 0

    def roots(self) -> list[int]:
        """Roots in ``F_p``, via ``gcd(f, x^p - x)`` then splitting."""
        return sorted(-f[0] % self.p for f in self._split_linear())

    def _split_linear(self):
        if self.degree <= 0:
            return []
        xpx = PrimePoly.x(self.p).powmod(self.p, self) - PrimePoly.x(self.p)
        g = self.gcd(xpx)
        return _equal_degree_split(g, 1) if g.degree > 0 else []

    def distinct_degree(self) -> list[tuple[int, "PrimePoly"]]:
        """``[(d, product of the degree-d irreducible factors)]`` for a squarefree input."""
        out = []
        f = self.monic()
        x = PrimePoly.x(self.p)
        h = x
        d = 0
        while f.degree >= 2 * (d + 1):
            d += 1
            h = h.powmod(self.p, f)
            g = f.gcd(h - x)
            if g.degree > 0:
                out.append((d, g))
                f = f // g
                h = h % f
        if f.degree > 0:
            out.append((f.degree, f))
        return out

    def factor(self) -> list[tuple["PrimePoly", int]]:
        """Monic irreducible factors with multiplicities, sorted by ``sort_key``."""
        if self.is_zero():
            raise UsageError("cannot factor the zero polynomial")
        result: dict[PrimePoly, int] = {}
        for sqf, mult in _squarefree_decomposition(self.monic()):
            for d, g in sqf.distinct_degree():
                for fac in _equal_degree_split(g, d):
                    result[fac] = result.get(fac, 0) + mult
        return sorted(result.items(), key=lambda kv: kv[0].sort_key())

    def format_factored(self) -> str:
        """``(x + 16) * (x^2 + 24*x + 16)``; the leading unit is dropped if 1."""
        parts = []
        lc = self.leading_coefficient()
        if self.degree <= 0:
            return str(lc)
        for fac, mult in self.factor():
            s = f"({fac})"
            parts.append(s if mult == 1 else f"{s}^{mult}")
        body = " * ".join(parts)
        return body if lc == 1 else f"{lc} * {body}"


_NUMPY_CUTOFF = 24


def _use_numpy(p, la, lb):
    # int64 must hold a sum of min(la, lb) products of residues
    return min(la, lb) >= _NUMPY_CUTOFF and (p - 1) ** 2 * min(la, lb) < 2**62


def _divmod_numpy(rem, divisor, inv, p):
    rem = np.array(rem, dtype=np.int64)
    oc = np.array(divisor, dtype=np.int64)
    d = len(oc) - 1
    quo = np.zeros(len(rem) - d, dtype=np.int64)
    for i in range(len(rem) - 1, d - 1, -1):
        c = int(rem[i]) * inv % p
        if c:
            quo[i - d] = c
            seg = rem[i - d : i + 1]
            rem[i - d : i + 1] = (seg - c * oc) % p
    return PrimePoly(p, quo.tolist()), PrimePoly(p, rem[:d].tolist())


def _squarefree_decomposition(f: PrimePoly, scale: int = 1):
    """``[(g, m)]`` with ``f = prod g^m`` and each ``g`` squarefree."""
    p = f.p
    if f.degree <= 0:
        return []
    fp = f.derivative()
    if fp.is_zero():
        return _squarefree_decomposition(_pth_root(f), scale * p)
    out = []
    c = f.gcd(fp)
    w = f // c
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        z = w // y
        if z.degree > 0:
            out.append((z.monic(), i * scale))
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        out.extend(_squarefree_decomposition(_pth_root(c), scale * p))
    return out


def _pth_root(f: PrimePoly) -> PrimePoly:
    # Frobenius is the identity on F_p coefficients
    p = f.p
    return PrimePoly(p, [f[i * p] for i in range(f.degree // p + 1)])


def _equal_degree_split(f: PrimePoly, d: int) -> list[PrimePoly]:
    """Cantor-Zassenhaus splitting of a product of distinct degree-``d`` irreducibles.

    The random source is seeded from the input so output is reproducible.
    """
    f = f.monic()
    if f.degree == d:
        return [f]
    if f.degree == 0:
        return []
    p = f.p
    if p == 2:
        raise UsageError("equal-degree splitting is implemented for odd p only")
    rng = random.Random(hash((p, f._c, d)) & 0xFFFFFFFF)
    e = (p**d - 1) // 2
    while True:
        a = PrimePoly(p, [rng.randrange(p) for _ in range(f.degree)])
        if a.degree <= 0:
            continue
        g = f.gcd(a)
        if 0 < g.degree < f.degree:
            break
        b = a.powmod(e, f) - 1
        g = f.gcd(b)
        if 0 < g.degree < f.degree:
            break
    return sorted(_equal_degree_split(g, d) + _equal_degree_split(f // g, d), key=PrimePoly.sort_key)


# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(\^)|([-+*/()]))")


def parse_poly(text: str, var: str | None = None) -> RationalPoly:
    """Parse products/powers of polynomials, e.g. ``"(T+27)(T+243)^3"``.

    Juxtaposition means multiplication (``256x``).  Any single letter is
    accepted as the variable unless ``var`` pins it.
    """
    tokens = []
    pos = 0
    s = text.strip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character in {text!r} at {pos}")
        pos = m.end()
        num, letter, caret, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif letter is not None:
            if var is not None and letter != var:
                raise ParseError(f"unexpected variable {letter!r} in {text!r}")
            var = letter
            tokens.append(("var", letter))
        elif caret:
            tokens.append(("^", None))
        else:
            tokens.append((op, None))
    parser = _PolyParser(tokens, text)
    out = parser.expr()
    if parser.i != len(tokens):
        raise ParseError(f"trailing input in {text!r}")
    return out


class _PolyParser:
    def __init__(self, tokens, text):
        self.t = tokens
        self.i = 0
        self.text = text

    def peek(self):
        return self.t[self.i][0] if self.i < len(self.t) else None

    def take(self, kind):
        if self.peek() != kind:
            raise ParseError(f"expected {kind!r} in {self.text!r}")
        tok = self.t[self.i]
        self.i += 1
        return tok

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take(self.peek())[0] == "-" else 1
        acc = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.take(self.peek())[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while True:
            k = self.peek()
            if k == "*":
                self.take("*")
                acc = acc * self.factor()
            elif k == "/":
                self.take("/")
                d = self.factor()
                if d.degree != 0:
                    raise ParseError("only division by constants is supported")
                acc = acc * Fraction(1) * (1 / Fraction(d[0]))
            elif k in ("num", "var", "("):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.take("^")
            exp = self.take("num")[1]
            base = base**exp
        return base

    def atom(self):
        k = self.peek()
        if k == "num":
            return RationalPoly((self.take("num")[1],))
        if k == "var":
            self.take("var")
            return RationalPoly.x()
        if k == "(":
            self.take("(")
            e = self.expr()
            self.take(")")
            return e
        raise ParseError(f"unexpected token {k!r} in {self.text!r}")


# primes

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_up_to(bound: int) -> list[int]:
    return [n for n in range(2, bound + 1) if is_prime(n)]
