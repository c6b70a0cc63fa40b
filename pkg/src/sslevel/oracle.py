"""Brute-force certification of supersingular j-invariants.

Nothing here touches q-series.  For every j in F_p or F_{p^2} we build a
curve with that j-invariant, count its points naively and call it
supersingular when the Frobenius trace is divisible by p.  Twisting flips
the sign of the trace, never its residue mod p, so the model choice is
irrelevant.

Point counts use the quadratic character: over F_p it is a Legendre table,
over F_{p^2} an element is a square exactly when its norm to F_p is.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DenominatorVanishes, FieldTooLarge, UsageError
from .polys import PrimePoly, is_prime

QUADRATIC_LIMIT = 60

__all__ = [
    "QuadExtElement",
    "nonresidue",
    "supersingular_j_set",
    "roots_in_quadratic",
    "check_level1",
    "check_leveln",
]


@lru_cache(maxsize=None)
def nonresidue(p: int) -> int:
    """Smallest positive quadratic non-residue mod an odd prime p."""
    for a in range(2, p):
        if pow(a, (p - 1) // 2, p) == p - 1:
            return a
    raise UsageError(f"no quadratic non-residue mod {p}")


@dataclass(frozen=True)
class QuadExtElement:
    """``a + b*s`` in ``F_p[s]/(s^2 - ns)`` with ``ns = nonresidue(p)``."""

    p: int
    a: int
    b: int = 0

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % self.p)
        object.__setattr__(self, "b", self.b % self.p)

    def _lift(self, other):
        if isinstance(other, QuadExtElement):
            return other
        if isinstance(other, int):
            return QuadExtElement(self.p, other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadExtElement(self.p, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElement(self.p, -self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        ns = nonresidue(self.p)
        return QuadExtElement(
            self.p, self.a * o.a + ns * self.b * o.b, self.a * o.b + self.b * o.a
        )

    __rmul__ = __mul__

    def norm(self) -> int:
        return (self.a * self.a - nonresidue(self.p) * self.b * self.b) % self.p

    def conjugate(self) -> "QuadExtElement":
        """Image under the p-power Frobenius."""
        return QuadExtElement(self.p, self.a, -self.b)

    def inverse(self) -> "QuadExtElement":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in F_p^2")
        inv = pow(n, -1, self.p)
        return QuadExtElement(self.p, self.a * inv, -self.b * inv)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def in_base_field(self) -> bool:
        return self.b == 0

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*s"


# point counting

def _legendre_table(p: int) -> np.ndarray:
    chi = -np.ones(p, dtype=np.int64)
    chi[(np.arange(p, dtype=np.int64) ** 2) % p] = 1
    chi[0] = 0
    return chi


def _model(j: int, p: int):
    """Coefficients ``(A, B)`` of ``y^2 = x^3 + Ax + B`` with the given j."""
    if j % p == 0:
        return 0, 1
    if (j - 1728) % p == 0:
        return 1, 0
    k = j * (1728 - j)
    return 3 * k % p, 2 * k * (1728 - j) % p


def _base_supersingular(p: int) -> set:
    chi = _legendre_table(p)
    x = np.arange(p, dtype=np.int64)
    x3 = x**3 % p
    out = set()
    for j in range(p):
        a, b = _model(j, p)
        total = chi[(x3 + a * x + b) % p].sum()
        if total == 0:
            out.add(j)
    return out


def _quad_model(ja: int, jb: int, p: int):
    """``(A, B)`` as F_{p^2} pairs for the j-invariant ``ja + jb*s``."""
    j = QuadExtElement(p, ja, jb)
    if j.is_zero():
        return (0, 0), (1, 0)
    k = 1728 - j
    if k.is_zero():
        return (1, 0), (0, 0)
    jk = j * k
    a = 3 * jk
    b = 2 * jk * k
    return (a.a, a.b), (b.a, b.b)


def _quad_supersingular(p: int) -> set:
    ns = nonresidue(p)
    chi = _legendre_table(p)
    # all x = u + v s
    u, v = np.divmod(np.arange(p * p, dtype=np.int64), p)
    x2u = (u * u + ns * v * v) % p
    x2v = (2 * u * v) % p
    x3u = (x2u * u + ns * x2v * v) % p
    x3v = (x2u * v + x2v * u) % p
    out = set()
    for ja in range(p):
        for jb in range(p):
            (aa, ab), (ba, bb) = _quad_model(ja, jb, p)
            # x^3 + A x + B
            ru = (x3u + aa * u + ns * ab * v + ba) % p
            rv = (x3v + aa * v + ab * u + bb) % p
            norm = (ru * ru - ns * rv * rv) % p
            total = int(chi[norm].sum())
            # trace = -total; supersingular iff p | trace
            if total % p == 0:
                out.add(QuadExtElement(p, ja, jb))
    return out


def supersingular_j_set(p: int, field: str = "base") -> frozenset:
    """Supersingular j-invariants in ``F_p`` (ints) or ``F_{p^2}`` (QuadExtElement)."""
    if p < 5 or not is_prime(p):
        raise UsageError(f"expected a prime p >= 5, got {p}")
    if field == "base":
        return frozenset(_base_supersingular(p))
    if field == "quadratic":
        if p > QUADRATIC_LIMIT:
            raise FieldTooLarge(
                f"F_p^2 sweep for p = {p} exceeds the limit {QUADRATIC_LIMIT}"
            )
        return frozenset(_cached_quadratic(p))
    raise UsageError(f"field must be 'base' or 'quadratic', got {field!r}")


@lru_cache(maxsize=None)
def _cached_quadratic(p: int) -> frozenset:
    return frozenset(_quad_supersingular(p))


# roots of polynomials in F_{p^2}

def _sqrt_mod(d: int, p: int) -> int:
    d %= p
    for r in range(p):
        if r * r % p == d:
            return r
    raise UsageError(f"{d} is not a square mod {p}")


def roots_in_quadratic(poly: PrimePoly) -> list | None:
    """All roots of ``poly`` in ``F_{p^2}``, or ``None`` if some factor has degree > 2.

    Roots are listed once per irreducible factor occurrence.
    """
    p = poly.p
    ns = nonresidue(p)
    out = []
    for fac, mult in poly.factor():
        if fac.degree == 1:
            out.extend([QuadExtElement(p, -fac[0])] * mult)
        elif fac.degree == 2:
            b, c = fac[1], fac[0]
            disc = (b * b - 4 * c) % p
            # disc is a non-residue: sqrt(disc) = sqrt(disc/ns) * s
            r = _sqrt_mod(disc * pow(ns, -1, p), p)
            half = pow(2, -1, p)
            for sgn in (1, -1):
                out.extend([QuadExtElement(p, -b * half, sgn * r * half)] * mult)
        else:
            return None
    return out


def check_level1(p: int, ssp1: PrimePoly) -> bool:
    """Roots of ``ss_p^(1)`` in F_{p^2} are exactly the supersingular j's."""
    roots = roots_in_quadratic(ssp1)
    if roots is None:
        return False
    expected = supersingular_j_set(p, "quadratic")
    return ssp1.degree == len(expected) and len(set(roots)) == len(roots) and set(roots) == expected


def check_leveln(p: int, n: int, sspn: PrimePoly, rel) -> bool:
    """Every root of ``ss_p^(N)`` maps under ``r_N`` to a supersingular j."""
    if n % p == 0:
        raise UsageError(f"p = {p} divides the level {n}")
    roots = roots_in_quadratic(sspn)
    if roots is None:
        return False
    expected = supersingular_j_set(p, "quadratic")
    bad = []
    ok = True
    for t in roots:
        num, den = rel.evaluate_mod(t, p)
        num, den = _as_quad(num, p), _as_quad(den, p)
        if den.is_zero():
            bad.append(str(t))
            continue
        if num / den not in expected:
            ok = False
    if bad:
        raise DenominatorVanishes(
            f"denominator of r_{n} vanishes mod {p} at roots {', '.join(bad)}"
        )
    return ok


def _as_quad(x, p):
    return x if isinstance(x, QuadExtElement) else QuadExtElement(p, int(x))
