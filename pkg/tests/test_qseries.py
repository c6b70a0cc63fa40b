from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sslevel.errors import (
    DivisionByZeroSeries,
    InsufficientPrecision,
    NonIntegralValuation,
    ParseError,
)
from sslevel.qseries import (
    EtaQuotientSpec,
    QSeries,
    bernoulli,
    binomial,
    divisor_sigma,
    eisenstein,
    eta_quotient,
    kz_series,
    parse_eta_spec,
)


def naive_eta_product(pairs, precision):
    """Direct expansion of prod (1 - q^(n k))^d, then shifted by the valuation."""
    v = sum(n * d for n, d in pairs) // 24
    length = precision - v
    coeffs = [1] + [0] * (length - 1)
    for n, d in pairs:
        for k in range(1, length):
            if n * k >= length:
                break
            step = n * k
            for _ in range(abs(d)):
                if d > 0:
                    # multiply by (1 - q^step)
                    for i in range(length - 1, step - 1, -1):
                        coeffs[i] -= coeffs[i - step]
                else:
                    # divide by (1 - q^step)
                    for i in range(step, length):
                        coeffs[i] += coeffs[i - step]
    return QSeries(v, coeffs, precision)


def test_delta_expansion():
    d = eta_quotient("1^24", 5)
    assert d.valuation == 1
    assert [d[e] for e in range(1, 5)] == [1, -24, 252, -1472]


def test_t2_expansion():
    t = eta_quotient("1^24/2^24", 3)
    assert (t.valuation, t.precision) == (-1, 3)
    assert [t[e] for e in (-1, 0, 1, 2)] == [1, -24, 276, -2048]


def test_identity_quotient():
    s = eta_quotient("1^1/1^1", 4)
    assert s == QSeries.constant(1, 4)


def test_nonintegral_valuation():
    with pytest.raises(NonIntegralValuation):
        eta_quotient("1^1", 5)


def test_precision_must_exceed_valuation():
    with pytest.raises(InsufficientPrecision):
        eta_quotient("2^48/1^24", 3)


@pytest.mark.parametrize(
    "text,pairs",
    [
        ("1^24/2^24", ((1, 24), (2, -24))),
        (" 2^8 * 3^4 / 1^4 * 6^8 ", ((1, -4), (2, 8), (3, 4), (6, -8))),
        ("1/25", ((1, 1), (25, -1))),
        ("1^24", ((1, 24),)),
    ],
)
def test_parse_eta_spec(text, pairs):
    assert parse_eta_spec(text).factors == pairs


@pytest.mark.parametrize("bad", ["", "1^", "a^2", "1^2/2^2/3^2", "0^24", "1^24 2^3"])
def test_parse_eta_spec_rejects(bad):
    with pytest.raises(ParseError):
        parse_eta_spec(bad)


def test_spec_requires_increasing_multipliers():
    with pytest.raises(Exception):
        EtaQuotientSpec(((2, 1), (1, 1)))


def test_eisenstein_examples():
    assert eisenstein(4, 3) == QSeries(0, [1, 240, 2160], 3)
    assert eisenstein(6, 2) == QSeries(0, [1, -504], 2)
    for k in (4, 6, 8, 12):
        assert eisenstein(k, 1) == QSeries.constant(1, 1)


def test_bernoulli_values():
    assert bernoulli(0) == 1
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_eisenstein_cubic_identity():
    e4, e6 = eisenstein(4, 12), eisenstein(6, 12)
    lhs = e4 * e4 * e4 - e6 * e6
    rhs = eta_quotient("1^24", 12) * 1728
    assert lhs == rhs


def test_e8_is_e4_squared():
    assert eisenstein(8, 15) == eisenstein(4, 15) * eisenstein(4, 15)


def test_kz_examples():
    g4 = kz_series("G", 4, 3)
    assert g4 == eisenstein(4, 3) * Fraction(3, 2)
    assert g4[0] == Fraction(3, 2) and g4[1] == 360
    assert kz_series("G", 2, 5).is_zero()


def bivariate_constant(k, s):
    """Constant q-term of the X^k coefficient of (1 - 3X^4 + 2X^6)^s.

    At q = 0 both Eisenstein series are 1, so this is a one-variable
    binomial series expansion, computed term by term.
    """
    # (1 + u)^s with u = -3X^4 + 2X^6, truncated at X^k
    poly = {0: Fraction(1)}
    total = {0: Fraction(1)}
    for n in range(1, k // 4 + 1):
        nxt = {}
        for e, c in poly.items():
            for de, dc in ((4, -3), (6, 2)):
                if e + de <= k:
                    nxt[e + de] = nxt.get(e + de, 0) + c * dc
        poly = nxt
        coeff = binomial(s, n)
        for e, c in poly.items():
            total[e] = total.get(e, 0) + coeff * c
    return total.get(k, 0)


@pytest.mark.parametrize("k", [12, 24])
def test_kz_h_constant_matches_bivariate_expansion(k):
    assert kz_series("H", k, 1)[0] == bivariate_constant(k, k // 2)


@pytest.mark.parametrize("k", [4, 6, 10, 12, 16, 22])
def test_kz_g_constant_matches_bivariate_expansion(k):
    assert kz_series("G", k, 1)[0] == bivariate_constant(k, Fraction(-1, 2))


def test_mul_of_reciprocals():
    t = eta_quotient("1^24/2^24", 6)
    u = eta_quotient("2^24/1^24", 8)
    prod = t * u
    assert prod == QSeries.constant(1, prod.precision)
    assert prod.precision >= 1


def test_self_division():
    d = eta_quotient("1^24", 5)
    assert d / d == QSeries.constant(1, 4)


def test_division_by_zero():
    with pytest.raises(DivisionByZeroSeries):
        QSeries.constant(1, 3) / QSeries(0, [0, 0, 0], 3)


def test_negative_power_is_inverse():
    t = eta_quotient("1^12/3^12", 8)
    assert (t**-2) * (t**2) == QSeries.constant(1, (t**-2 * t**2).precision)


def test_format():
    assert eta_quotient("1^24/2^24", 2).format() == "q^-1 - 24 + 276*q + O(q^2)"


def test_divisor_sigma():
    assert [divisor_sigma(n) for n in range(1, 7)] == [1, 3, 4, 7, 6, 12]
    assert divisor_sigma(2, 3) == 9


# property tests

small_pairs = st.lists(
    st.tuples(st.integers(1, 6), st.integers(-6, 6)), min_size=1, max_size=3
)


def _fix(pairs):
    # append a factor of 1^d to make the weight sum divisible by 24
    s = sum(n * d for n, d in pairs)
    return list(pairs) + [(1, (-s) % 24)]


@settings(max_examples=40, deadline=None)
@given(small_pairs, st.integers(2, 12), st.integers(1, 10))
def test_eta_truncation_consistent(pairs, p1, extra):
    pairs = _fix(pairs)
    spec = EtaQuotientSpec.from_pairs(pairs)
    v = spec.valuation()
    lo, hi = v + p1, v + p1 + extra
    assert eta_quotient(spec, hi).truncate(lo) == eta_quotient(spec, lo)


@settings(max_examples=40, deadline=None)
@given(small_pairs, small_pairs)
def test_eta_multiplicative(a, b):
    a, b = _fix(a), _fix(b)
    sa, sb = EtaQuotientSpec.from_pairs(a), EtaQuotientSpec.from_pairs(b)
    merged = sa * sb
    prec = merged.valuation() + 10
    lhs = eta_quotient(sa, sa.valuation() + 10) * eta_quotient(sb, sb.valuation() + 10)
    rhs = eta_quotient(merged, prec)
    assert lhs.agrees_with(rhs)


@settings(max_examples=30, deadline=None)
@given(small_pairs)
def test_eta_matches_naive_product(pairs):
    pairs = _fix(pairs)
    spec = EtaQuotientSpec.from_pairs(pairs)
    prec = spec.valuation() + 12
    assert eta_quotient(spec, prec) == naive_eta_product(spec.factors, prec)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(-50, 50), min_size=1, max_size=10),
    st.lists(st.integers(-50, 50), min_size=1, max_size=10),
    st.integers(-3, 3),
)
def test_division_roundtrip(num, den, shift):
    den = list(den)
    if den[0] == 0:
        den[0] = 1
    a = QSeries(0, num, len(num))
    b = QSeries(shift, den, shift + len(den))
    if a.is_zero():
        return
    q = a / b
    back = q * b
    assert back.agrees_with(a)
    assert back.precision <= a.precision


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 8).map(lambda k: 2 * k + 2), st.integers(1, 8))
def test_eisenstein_truncation(k, prec):
    assert eisenstein(k, prec + 3).truncate(prec) == eisenstein(k, prec)
