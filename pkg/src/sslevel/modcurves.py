"""Modular curves X_0(N)+e,f,... and their genera.

A curve is described by its level and a group of Atkin-Lehner involutions,
written the way the rationality tables write them (``2+``, ``6+6``, ``3-``,
``30+6,10,15``).  Genera of quotients come from Riemann-Hurwitz, which needs
the number of fixed points of each involution; those are counted from CM
data (class numbers of the orders containing a square root of -Q, times a
local count of stable level structures) plus the fixed cusps.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .errors import (
    InvalidDiscriminant,
    NonIntegralGenus,
    NotExactDivisor,
    ParseError,
    PrimeDividesLevel,
    UsageError,
)
from .polys import is_prime

__all__ = [
    "CurveDescriptor",
    "GenusBreakdown",
    "parse_descriptor",
    "genus_x0",
    "class_number",
    "fixed_points",
    "genus_quotient",
    "build_xp",
    "exact_divisors",
    "factorize",
]


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def exact_divisors(n: int) -> list[int]:
    return [d for d in divisors(n) if gcd(d, n // d) == 1]


def al_product(e: int, f: int) -> int:
    """Group law on Atkin-Lehner labels: ``w_e w_f = w_{ef/gcd(e,f)^2}``."""
    g = gcd(e, f)
    return e * f // (g * g)


def _close(labels) -> frozenset:
    group = {1}
    frontier = set(labels) | {1}
    while frontier:
        group |= frontier
        frontier = {al_product(a, b) for a in group for b in group} - group
    return frozenset(group)


@dataclass(frozen=True)
class CurveDescriptor:
    """``X_0(level)`` modulo the Atkin-Lehner involutions listed in ``involutions``."""

    level: int
    involutions: frozenset

    def __post_init__(self):
        n = self.level
        if n < 1:
            raise UsageError(f"level must be positive, got {n}")
        for e in self.involutions:
            if e < 1 or n % e or gcd(e, n // e) != 1:
                raise NotExactDivisor(f"{e} is not an exact divisor of {n}")
        object.__setattr__(self, "involutions", _close(self.involutions))

    @classmethod
    def x0(cls, n: int) -> "CurveDescriptor":
        return cls(n, frozenset({1}))

    @classmethod
    def plus(cls, n: int) -> "CurveDescriptor":
        return cls(n, frozenset(exact_divisors(n)))

    @property
    def generators(self) -> tuple:
        """A minimal generating set, chosen greedily from the smallest labels."""
        gens: list[int] = []
        span = {1}
        for e in sorted(self.involutions):
            if e not in span:
                gens.append(e)
                span = set(_close(gens))
        return tuple(gens)

    @property
    def rank(self) -> int:
        return len(self.involutions).bit_length() - 1

    def is_full(self) -> bool:
        return self.involutions == frozenset(exact_divisors(self.level))

    def is_x0(self) -> bool:
        return self.involutions == frozenset({1})

    def __str__(self):
        if self.is_x0():
            return f"{self.level}-"
        if self.is_full():
            return f"{self.level}+"
        return f"{self.level}+" + ",".join(str(e) for e in self.generators)

    def label(self) -> str:
        return str(self)


_DESC = re.compile(r"^(\d+)\s*([+-])\s*([\d,\s]*)$")


def parse_descriptor(text: str) -> CurveDescriptor:
    """Parse ``N+``, ``N-`` or ``N+e,f,...``."""
    m = _DESC.match(text.strip())
    if not m:
        raise ParseError(f"cannot parse curve descriptor {text!r}")
    n = int(m.group(1))
    if n < 1:
        raise ParseError("level must be positive")
    sign, rest = m.group(2), m.group(3).replace(" ", "")
    if sign == "-":
        if rest:
            raise ParseError(f"'{n}-' takes no involution list, got {rest!r}")
        return CurveDescriptor.x0(n)
    if not rest:
        return CurveDescriptor.plus(n)
    try:
        labels = [int(t) for t in rest.split(",")]
    except ValueError as exc:
        raise ParseError(f"bad involution list {rest!r}") from exc
    for e in labels:
        if e < 1 or n % e or gcd(e, n // e) != 1:
            raise NotExactDivisor(f"{e} is not an exact divisor of {n}")
    return CurveDescriptor(n, frozenset(labels))


# genus of X_0(N)

@dataclass(frozen=True)
class GenusBreakdown:
    index: int
    elliptic2: int
    elliptic3: int
    cusps: int
    genus: int


def _euler_phi(n: int) -> int:
    out = n
    for p in factorize(n):
        out -= out // p
    return out


def _kronecker(d: int, p: int) -> int:
    """Kronecker symbol (d/p) for a prime p."""
    if p == 2:
        if d % 2 == 0:
            return 0
        return 1 if d % 8 in (1, 7) else -1
    r = d % p
    if r == 0:
        return 0
    return 1 if pow(r, (p - 1) // 2, p) == 1 else -1


def genus_x0(n: int) -> GenusBreakdown:
    if n < 1:
        raise UsageError(f"level must be positive, got {n}")
    fac = factorize(n)
    mu = n
    for p in fac:
        mu = mu * (p + 1) // p
    nu2 = 0 if n % 4 == 0 else _prod(1 + _kronecker(-4, p) for p in fac)
    nu3 = 0 if n % 9 == 0 else _prod(1 + _kronecker(-3, p) for p in fac)
    cusps = sum(_euler_phi(gcd(d, n // d)) for d in divisors(n))
    g = 1 + Fraction(mu, 12) - Fraction(nu2, 4) - Fraction(nu3, 3) - Fraction(cusps, 2)
    if g.denominator != 1 or g < 0:
        raise NonIntegralGenus(f"genus formula gave {g} for X_0({n})")
    return GenusBreakdown(mu, nu2, nu3, cusps, int(g))


def _prod(it):
    out = 1
    for x in it:
        out *= x
    return out


# class numbers

@lru_cache(maxsize=4096)
def class_number(d: int) -> int:
    """Number of reduced primitive positive definite forms of discriminant ``d``."""
    if d >= 0 or d % 4 not in (0, 1):
        raise InvalidDiscriminant(f"{d} is not a negative discriminant")
    h = 0
    amax = isqrt(-d // 3)
    for a in range(1, amax + 1):
        for b in range(-a + 1, a + 1):
            num = b * b - d
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if c == a and b < 0:
                continue
            if gcd(gcd(a, abs(b)), c) != 1:
                continue
            h += 1
    return h


# fixed points of Atkin-Lehner involutions

def _p1_points(m: int):
    """Canonical points of P^1(Z/m) for a prime power ``m = p^k``.

    These are the cyclic subgroups of order m in (Z/m)^2: ``(1, t)`` for
    every t, and ``(p*s, 1)`` for s mod p^(k-1).
    """
    p = min(factorize(m))
    return [(1, t) for t in range(m)] + [(p * s % m, 1) for s in range(m // p)]


def _p1_normalize(x: int, y: int, m: int):
    """Canonical representative of the line through primitive ``(x, y)`` mod ``m = p^k``."""
    if gcd(x, m) == 1:
        return (1, y * pow(x, -1, m) % m)
    return (x * pow(y, -1, m) % m, 1)


def _apply(mat, pt, m):
    (a, b), (c, d) = mat
    x, y = pt
    return (a * x + b * y) % m, (c * x + d * y) % m


def _stable_lines(matrix, m: int) -> frozenset:
    """Lines of (Z/m)^2, ``m = p^k``, mapped into themselves by ``matrix``."""
    out = []
    for pt in _p1_points(m):
        u, v = _apply(matrix, pt, m)
        # for a primitive (x, y), (u, v) lies on its line iff the 2x2 determinant vanishes
        if (u * pt[1] - v * pt[0]) % m == 0:
            out.append(pt)
    return frozenset(out)


def _order_data(q: int):
    """Orders carrying a primitive degree-q endomorphism phi with phi^2 in q*Aut.

    Yields ``(discriminant, phi_matrix, units)`` where ``phi_matrix`` is the
    action of phi on the Z-basis ``(1, w)`` of the order and ``units`` lists
    the matrices of a set of representatives of Aut/{+-1}.
    """
    out = []
    # Z[sqrt(-q)], basis (1, s), s^2 = -q
    out.append((-4 * q, ((0, -q), (1, 0)), [((1, 0), (0, 1))]))
    if q % 4 == 3:
        # Z[w], w = (1 + sqrt(-q))/2, w^2 = w - (1+q)/4; phi = 2w - 1
        r = (1 + q) // 4
        phi = ((-1, -2 * r), (2, 1))
        units = [((1, 0), (0, 1))]
        if q == 3:
            # w is a primitive sixth root of unity; omega = w - 1 has order 3
            omega = ((-1, -1), (1, 0))
            units = [((1, 0), (0, 1)), omega, _matmul(omega, omega)]
        out.append((-q, phi, units))
    if q == 2:
        # Z[i], phi = 1 + i
        i_mat = ((0, -1), (1, 0))
        out.append((-4, ((1, -1), (1, 1)), [((1, 0), (0, 1)), i_mat]))
    return out


def _matmul(x, y):
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


def _count_stable_structures(phi, units, m: int) -> int:
    """Aut-orbits of cyclic order-m subgroups stabilised by some ``u*phi``.

    Works prime by prime.  Where every ``u*phi`` has the same stable lines
    and every unit fixes them, the local count just multiplies; the remaining
    primes are enumerated jointly and orbits counted explicitly.
    """
    if m == 1:
        return 1
    total = 1
    awkward = []
    for p, k in sorted(factorize(m).items()):
        pk = p**k
        sets = [_stable_lines(_matmul(u, phi), pk) for u in units]
        uniform = all(s == sets[0] for s in sets) and all(
            _p1_normalize(*_apply(u, pt, pk), pk) == pt for u in units for pt in sets[0]
        )
        if uniform:
            total *= len(sets[0])
            if not total:
                return 0
        else:
            awkward.append((pk, sets))
    if not awkward:
        return total
    # points are tuples of local lines, one per awkward prime power
    candidates = set()
    for ui in range(len(units)):
        combos = [()]
        for pk, sets in awkward:
            combos = [c + (pt,) for c in combos for pt in sorted(sets[ui])]
        candidates.update(combos)
    seen = set()
    orbits = 0
    for point in sorted(candidates):
        if point in seen:
            continue
        orbits += 1
        for u in units:
            seen.add(tuple(
                _p1_normalize(*_apply(u, pt, pk), pk) for pt, (pk, _) in zip(point, awkward)
            ))
    return total * orbits


def _cusp_invariant(a: int, c: int, n: int):
    a, c = (a, c) if c >= 0 else (-a, -c)
    d = gcd(c, n)
    g = gcd(d, n // d)
    return d, (a * (c // d)) % g if g > 1 else 0


def _cusp_representatives(n: int):
    reps = []
    for d in divisors(n):
        g = gcd(d, n // d)
        for x in range(g):
            if gcd(x, g) != 1 and g > 1:
                continue
            a = x if g > 1 else 1
            while gcd(a, d) != 1:
                a += g
            reps.append((a, d))
    return reps


def _al_matrix(n: int, q: int):
    """An integral matrix ``[[q, y], [n, q*w]]`` of determinant ``q``."""
    m = n // q
    # q*w - m*y = 1
    w = pow(q, -1, m) if m > 1 else 1
    y = (q * w - 1) // m if m > 1 else q - 1
    return ((q, y), (n, q * w))


def fixed_cusps(n: int, q: int) -> int:
    (a11, a12), (a21, a22) = _al_matrix(n, q)
    count = 0
    for a, c in _cusp_representatives(n):
        na, nc = a11 * a + a12 * c, a21 * a + a22 * c
        g = gcd(na, nc)
        if _cusp_invariant(na // g, nc // g, n) == _cusp_invariant(a, c, n):
            count += 1
    return count


def fixed_points(n: int, q: int) -> int:
    """Number of fixed points of ``w_q`` on X_0(n), cusps included."""
    if q <= 1 or n % q or gcd(q, n // q) != 1:
        raise NotExactDivisor(f"{q} is not an exact divisor > 1 of {n}")
    m = n // q
    total = 0
    for disc, phi, units in _order_data(q):
        local = _count_stable_structures(phi, units, m)
        if local:
            total += class_number(disc) * local
    return total + fixed_cusps(n, q)


def genus_quotient(x: CurveDescriptor) -> int:
    """Genus of ``X_0(N)/W`` via Riemann-Hurwitz."""
    n = x.level
    g = genus_x0(n).genus
    size = len(x.involutions)
    ram = sum(fixed_points(n, w) for w in x.involutions if w != 1)
    # 2g - 2 = |W| (2g' - 2) + ram
    num = 2 * g - 2 - ram + 2 * size
    if num % (2 * size):
        raise NonIntegralGenus(
            f"Riemann-Hurwitz gives non-integral genus for {x}: (2g-2-ram) = {2*g-2-ram}, |W| = {size}"
        )
    g2 = num // (2 * size)
    if g2 < 0:
        raise NonIntegralGenus(f"Riemann-Hurwitz gives negative genus {g2} for {x}")
    return g2


def build_xp(x: CurveDescriptor, p: int) -> CurveDescriptor:
    """``X^p = X_0(Np) + {e, ..., p, pe, ...}``."""
    if not is_prime(p):
        raise UsageError(f"{p} is not prime")
    if x.level % p == 0:
        raise PrimeDividesLevel(f"{p} divides the level {x.level}")
    inv = set(x.involutions) | {p * e for e in x.involutions}
    return CurveDescriptor(x.level * p, frozenset(inv))
