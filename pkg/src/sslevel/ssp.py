"""Supersingular polynomials for the genus zero curves X_0(N).

For a prime ``p >= 5`` write ``p - 1 = 12m + 4*delta + 6*epsilon``.  A level
one form ``f`` of weight ``p - 1`` divided by ``E_4^delta E_6^epsilon
Delta_N^m`` is a modular function for Gamma_0(N) with its only pole at the
cusp infinity, hence a polynomial ``f_poly`` in the principal modulus
``T_N``.  Multiplying by ``g_poly``, whose roots are the ``T_N``-values above
``j = 0`` and ``j = 1728``, and reducing mod p gives the supersingular
polynomial up to sign.

Two routes compute ``f_poly``:

* :func:`f_poly` works over Q with exact integers and reduces at the end.
* :func:`supersingular_poly` uses the same elimination directly mod p with
  numpy.  This is valid because every series involved is p-integral
  (``E_{p-1}``, ``G``, ``H`` have no p in any denominator and all divisors
  have leading coefficient 1), so reduction commutes with each step.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

import numpy as np

from .errors import (
    InsufficientPrecision,
    InvariantViolation,
    IrreducibleFactorDegreeExceedsTwo,
    LeadingCoefficientNotUnit,
    NonPolynomialResidual,
    NotSquarefree,
    PDividesDenominator,
    PrimeDividesLevel,
    UnsupportedLevel,
    UsageError,
)
from .polys import PrimePoly, RationalPoly, is_prime
from .qseries import (
    QSeries,
    bernoulli,
    eisenstein,
    eta_quotient,
    kz_coefficient,
    kz_series,
    kz_terms,
    parse_eta_spec,
)
from .tables import DELTA_ETA, HAUPTMODUL_ETA, SUPPORTED_LEVELS, relation_polys

GUARD = 10
FORMS = ("E", "G", "H")


@dataclass(frozen=True)
class WeightDecomposition:
    m: int
    delta: int
    epsilon: int


def decompose_weight(p: int) -> WeightDecomposition:
    """The unique ``(m, delta, epsilon)`` with ``p - 1 = 12m + 4delta + 6epsilon``."""
    if p < 5 or not is_prime(p):
        raise UsageError(f"expected a prime p >= 5, got {p}")
    delta = 1 if p % 3 == 2 else 0
    epsilon = 1 if p % 4 == 3 else 0
    m = (p - 1 - 4 * delta - 6 * epsilon) // 12
    return WeightDecomposition(m, delta, epsilon)


def _check_level(n: int):
    if n not in SUPPORTED_LEVELS:
        raise UnsupportedLevel(
            f"level {n} is not one of the genus zero levels {SUPPORTED_LEVELS}"
        )


def _check_prime(p: int, n: int) -> WeightDecomposition:
    dec = decompose_weight(p)
    if n % p == 0:
        raise PrimeDividesLevel(f"p = {p} divides the level {n}")
    return dec


def _normalize_form(form: str) -> str:
    f = form.upper()
    if f not in FORMS:
        raise UsageError(f"form must be one of e, g, h; got {form!r}")
    return f


# q-expansions

def hauptmodul(n: int, precision: int) -> QSeries:
    """``T_N`` to ``O(q^precision)``; for ``N = 1`` this is ``j``."""
    _check_level(n)
    if n == 1:
        e4 = eisenstein(4, precision + 1)
        delta = eta_quotient("1^24", precision + 2)
        return (e4 * e4 * e4) / delta
    return eta_quotient(HAUPTMODUL_ETA[n].value, precision)


def delta_valuation(n: int) -> int:
    _check_level(n)
    return parse_eta_spec(DELTA_ETA[n].value).valuation()


def delta_n(n: int, precision: int) -> QSeries:
    """The weight 12 form on Gamma_0(N) vanishing only at infinity."""
    _check_level(n)
    return eta_quotient(DELTA_ETA[n].value, precision)


@lru_cache(maxsize=32)
def _hauptmodul_ints(n: int, precision: int) -> tuple:
    return hauptmodul(n, precision).coefficients


@lru_cache(maxsize=16)
def _power_table(n: int, count: int, precision: int) -> tuple:
    """Coefficients of ``T_N^k`` for ``k = 0..count``.

    Entry ``k`` starts at ``q^-k`` and is trusted below ``q^precision``.
    """
    length = precision + count
    t = list(_hauptmodul_ints(n, length))
    cur = [1] + [0] * (length - 1)
    table = [tuple(cur)]
    for _ in range(count):
        cur = _mul_trunc(cur, t, length)
        table.append(tuple(cur))
    return tuple(table)


def _mul_trunc(a, b, n):
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j, y in enumerate(b[: n - i]):
                if y:
                    out[i + j] += x * y
    return out


def _div_monic(a, b, n):
    """First ``n`` coefficients of ``a / b`` with ``b[0] == 1``."""
    out = []
    for k in range(n):
        s = a[k] if k < len(a) else 0
        for i in range(1, min(k, len(b) - 1) + 1):
            if b[i]:
                s -= b[i] * out[k - i]
        out.append(s)
    return out


def _eliminate(c, d, table, guard):
    """Peel ``c_k T^k`` off a series with pole order ``d``.

    ``c[i]`` is the coefficient of ``q^(i-d)``; returns polynomial
    coefficients lowest first.  Works on exact values of any kind.
    """
    c = list(c)
    poly = [0] * (d + 1)
    for k in range(d, 0, -1):
        a = c[d - k]
        if a:
            tk = table[k]
            for i in range(min(len(tk), len(c) - (d - k))):
                if tk[i]:
                    c[d - k + i] -= a * tk[i]
        poly[k] = a
    poly[0] = c[d]
    residual = [x for x in c[d + 1 : d + guard] if x]
    if residual:
        raise NonPolynomialResidual(
            f"{len(residual)} nonzero coefficients remain after eliminating T powers"
        )
    return poly


def to_hauptmodul_poly(s: QSeries, n: int) -> RationalPoly:
    """The polynomial ``P`` with ``P(T_N) = s``, by leading-term elimination."""
    _check_level(n)
    if s.is_zero():
        return RationalPoly(())
    d = max(0, -s.valuation)
    guard = s.precision
    if guard < 2:
        raise InsufficientPrecision(
            f"series known only below q^{s.precision}; need q^1 to check the residual"
        )
    table = _power_table(n, d, guard)
    c = [s[e] for e in range(-d, guard)]
    return RationalPoly(_eliminate(c, d, table, guard))


# f_p^(N) over Q

def _form_series(form: str, k: int, precision: int) -> QSeries:
    if form == "E":
        return eisenstein(k, precision)
    return kz_series(form, k, precision)


def _denominator_ints(dec: WeightDecomposition, n: int, length: int) -> list:
    """``E_4^delta E_6^epsilon (Delta_N / q^v)^m``, first ``length`` coefficients."""
    v = delta_valuation(n)
    spec = parse_eta_spec(DELTA_ETA[n].value) ** dec.m
    out = list(eta_quotient(spec, dec.m * v + length).coefficients)
    out += [0] * (length - len(out))
    if dec.delta:
        out = _mul_trunc(out, list(eisenstein(4, length).coefficients), length)
    if dec.epsilon:
        out = _mul_trunc(out, list(eisenstein(6, length).coefficients), length)
    return out


def _f_poly_exact(form: str, p: int, n: int, guard: int) -> RationalPoly:
    dec = decompose_weight(p)
    d = dec.m * delta_valuation(n)
    length = d + guard
    f = _form_series(form, p - 1, length)
    scale = lcm(*(Fraction(c).denominator for c in f.coefficients))
    num = [int(c * scale) for c in f.coefficients]
    num += [0] * (length - len(num))
    den = _denominator_ints(dec, n, length)
    s = _div_monic(num, den, length)
    table = _power_table(n, d, guard)
    poly = _eliminate(s, d, table, guard)
    return RationalPoly([Fraction(c, scale) for c in poly])


def f_poly(form: str, p: int, n: int) -> RationalPoly:
    """``f_p^(N)`` over Q for ``form`` in ``E``, ``G``, ``H``.

    Works with ``d + 10`` coefficients and retries once at double size if
    the residual does not vanish.
    """
    form = _normalize_form(form)
    _check_level(n)
    dec = _check_prime(p, n)
    d = dec.m * delta_valuation(n)
    try:
        out = _f_poly_exact(form, p, n, GUARD)
    except NonPolynomialResidual:
        out = _f_poly_exact(form, p, n, d + 2 * GUARD)
    for i, c in enumerate(out.coefficients):
        if Fraction(c).denominator % p == 0:
            raise PDividesDenominator(
                f"coefficient of x^{i} in f_{p}^({n}) has a denominator divisible by {p}"
            )
    return out


# f_p^(N) mod p

def _conv_mod(a, b, n, p):
    return np.convolve(a[:n], b[:n])[:n] % p


def _pow_mod(a, k, n, p):
    out = np.zeros(n, dtype=np.int64)
    out[0] = 1
    base = a[:n] % p
    while k:
        if k & 1:
            out = _conv_mod(out, base, n, p)
        k >>= 1
        if k:
            base = _conv_mod(base, base, n, p)
    return out


def _rat_mod(c, p: int) -> int:
    c = Fraction(c)
    if c.denominator % p == 0:
        raise PDividesDenominator(f"{c} has a denominator divisible by {p}")
    return c.numerator * pow(c.denominator, -1, p) % p


def _sigma_mod(k: int, n: int, p: int) -> np.ndarray:
    """``sigma_k(i) mod p`` for ``i < n`` by a divisor sieve."""
    out = np.zeros(n, dtype=np.int64)
    for d in range(1, n):
        out[d::d] += pow(d, k, p)
    return out % p


def _eisenstein_mod(k: int, n: int, p: int) -> np.ndarray:
    const = _rat_mod(-Fraction(2 * k) / bernoulli(k), p)
    out = _sigma_mod(k - 1, n, p) * const % p
    out[0] = 1
    return out


def _form_mod(form: str, k: int, n: int, p: int) -> np.ndarray:
    if form == "E":
        return _eisenstein_mod(k, n, p)
    e4 = _eisenstein_mod(4, n, p)
    e6 = _eisenstein_mod(6, n, p)
    out = np.zeros(n, dtype=np.int64)
    for a, b in kz_terms(k):
        coeff = _rat_mod(kz_coefficient(form, k, a, b), p)
        if coeff:
            term = _conv_mod(_pow_mod(e4, a, n, p), _pow_mod(e6, b, n, p), n, p)
            out = (out + coeff * term) % p
    return out


def _ints_mod(values, n, p) -> np.ndarray:
    out = np.zeros(n, dtype=np.int64)
    vals = [int(v) % p for v in values[:n]]
    out[: len(vals)] = vals
    return out


def _f_poly_mod(form: str, p: int, n: int, guard: int) -> PrimePoly:
    dec = decompose_weight(p)
    v = delta_valuation(n)
    d = dec.m * v
    length = d + guard
    f = _form_mod(form, p - 1, length, p)
    dn = _ints_mod(delta_n(n, v + length).coefficients, length, p)
    den = _pow_mod(dn, dec.m, length, p)
    if dec.delta:
        den = _conv_mod(den, _eisenstein_mod(4, length, p), length, p)
    if dec.epsilon:
        den = _conv_mod(den, _eisenstein_mod(6, length, p), length, p)
    # series division, den[0] == 1
    s = np.zeros(length, dtype=np.int64)
    for k in range(length):
        acc = int(f[k]) - int(np.dot(den[1 : k + 1], s[k - 1 :: -1][:k])) if k else int(f[0])
        s[k] = acc % p
    t = _ints_mod(_hauptmodul_ints(n, length), length, p)
    poly = [0] * (d + 1)
    power = np.zeros(length, dtype=np.int64)
    power[0] = 1
    powers = [power]
    for _ in range(d):
        powers.append(_conv_mod(powers[-1], t, length, p))
    for k in range(d, 0, -1):
        a = int(s[d - k])
        if a:
            seg = s[d - k :]
            tk = powers[k][: len(seg)]
            seg[: len(tk)] = (seg[: len(tk)] - a * tk) % p
        poly[k] = a
    poly[0] = int(s[d])
    if np.any(s[d + 1 : d + guard]):
        raise NonPolynomialResidual(
            f"residual does not vanish mod {p} after eliminating T powers"
        )
    return PrimePoly(p, poly)


def f_poly_mod(form: str, p: int, n: int) -> PrimePoly:
    """``f_p^(N) mod p`` computed entirely in ``F_p``."""
    form = _normalize_form(form)
    _check_level(n)
    dec = _check_prime(p, n)
    d = dec.m * delta_valuation(n)
    try:
        return _f_poly_mod(form, p, n, GUARD)
    except NonPolynomialResidual:
        return _f_poly_mod(form, p, n, d + 2 * GUARD)


# modular relations and g_p^(N)

@dataclass(frozen=True)
class ModularRelation:
    """``j = numerator(T_N) / denominator(T_N)``."""

    level: int
    numerator: RationalPoly
    denominator: RationalPoly

    def evaluate_mod(self, t, p: int):
        """``(numerator(t), denominator(t))`` for ``t`` in a field of characteristic p.

        ``t`` may be an int or any object supporting ``+``, ``*`` with ints.
        """
        return _horner(self.numerator.reduce_mod(p).coefficients, t), _horner(
            self.denominator.reduce_mod(p).coefficients, t
        )


def _horner(coeffs, t):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def modular_relation(n: int) -> ModularRelation:
    _check_level(n)
    num, den = relation_polys(n)
    return ModularRelation(n, num, den)


@lru_cache(maxsize=None)
def checked_relation(n: int) -> ModularRelation:
    """The tabulated relation, verified against q-expansions on first use."""
    rel = modular_relation(n)
    if not verify_modular_relation(n, rel):
        raise InvariantViolation(f"tabulated modular relation for level {n} fails its q-expansion check")
    return rel


def g_parts(n: int) -> tuple[RationalPoly, RationalPoly]:
    """Radicals of the numerators of ``r_N`` and ``r_N - 1728``."""
    rel = checked_relation(n)
    above_0 = rel.numerator.radical()
    above_1728 = (rel.numerator - rel.denominator * 1728).radical()
    return above_0, above_1728


def g_poly(p: int, n: int) -> RationalPoly:
    """``g_p^(N)``, the factor whose roots lie above ``j = 0`` and ``j = 1728``."""
    _check_level(n)
    dec = _check_prime(p, n)
    above_0, above_1728 = g_parts(n)
    return above_0**dec.delta * above_1728**dec.epsilon


# supersingular polynomial

@dataclass(frozen=True)
class SupersingularPoly:
    poly: PrimePoly
    sign: int
    form: str


def supersingular_data(form: str, p: int, n: int, exact: bool = False) -> SupersingularPoly:
    """Monic ``ss_p^(N)`` together with the sign dropped when normalizing."""
    form = _normalize_form(form)
    _check_level(n)
    _check_prime(p, n)
    g = g_poly(p, n).reduce_mod(p)
    f = f_poly(form, p, n).reduce_mod(p) if exact else f_poly_mod(form, p, n)
    prod = f * g
    lc = prod.leading_coefficient()
    if lc == 1:
        sign = 1
    elif lc == p - 1:
        sign = -1
    else:
        raise LeadingCoefficientNotUnit(
            f"leading coefficient of f*g mod {p} is {lc}, expected +-1"
        )
    return SupersingularPoly(prod.monic(), sign, form)


def supersingular_poly(form: str, p: int, n: int, exact: bool = False) -> PrimePoly:
    """``ss_p^(N)`` over ``F_p``, monic."""
    return supersingular_data(form, p, n, exact).poly


def splitting_type(poly: PrimePoly) -> tuple[int, int]:
    """``(linear, quadratic)`` irreducible factor counts of a supersingular polynomial."""
    if poly.degree <= 0:
        return 0, 0
    if not poly.is_squarefree():
        raise NotSquarefree(f"{poly} over F_{poly.p} has a repeated factor")
    p = poly.p
    f = poly.monic()
    x = PrimePoly.x(p)
    xp = x.powmod(p, f)
    lin = f.gcd(xp - x)
    rest_deg = f.degree - lin.degree
    if rest_deg % 2:
        raise IrreducibleFactorDegreeExceedsTwo(
            f"{rest_deg} roots outside F_{p} cannot pair into quadratic factors"
        )
    if rest_deg:
        rest = f // lin
        xpp = xp.powmod(p, rest)
        if not ((xpp - x) % rest).is_zero():
            raise IrreducibleFactorDegreeExceedsTwo(
                f"some factor of ss over F_{p} has no root in F_{p}^2"
            )
    return lin.degree, rest_deg // 2


def verify_modular_relation(n: int, relation: ModularRelation | None = None) -> bool:
    """Check ``j * den(T_N) == num(T_N)`` coefficientwise below ``q^P``.

    ``P = deg num + deg den + 20``.
    """
    _check_level(n)
    rel = relation or modular_relation(n)
    dn, dd = rel.numerator.degree, rel.denominator.degree
    target = dn + dd + 20
    work = target + dn + dd + 2
    t = hauptmodul(n, work)
    j = hauptmodul(1, work)
    lhs = j * rel.denominator(t)
    rhs = rel.numerator(t)
    diff = lhs - rhs
    if diff.precision < target:
        raise InsufficientPrecision(
            f"relation check reached q^{diff.precision}, needed q^{target}"
        )
    return diff.truncate(target).is_zero()
