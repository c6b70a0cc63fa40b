import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sslevel.errors import ParseError, PDividesDenominator
from sslevel.polys import PrimePoly, RationalPoly, is_prime, parse_poly, primes_up_to


def brute_roots(f: PrimePoly):
    return sorted(x for x in range(f.p) if f(x) == 0)


def test_parse_and_print():
    f = parse_poly("(T+256)^3 - 1728T^2")
    assert f.radical() == parse_poly("x^2 - 448x - 32768")
    assert str(parse_poly("x^2 - 448x - 32768")) == "x^2 - 448*x - 32768"


def test_parse_juxtaposition_and_powers():
    assert parse_poly("(T+27)(T+243)^3") == parse_poly("(T+27)*(T+243)*(T+243)*(T+243)")
    assert parse_poly("256x") == RationalPoly((0, 256))
    assert parse_poly("x/2 + 1") == RationalPoly((1, Fraction(1, 2)))


@pytest.mark.parametrize("bad", ["x +", "(x+1", "x^y", "x y z + $", "x/x"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_poly(bad)


def test_parse_rejects_second_variable():
    with pytest.raises(ParseError):
        parse_poly("x + T")


def test_rational_division_and_gcd():
    a = RationalPoly.from_roots([1, 2, 3])
    b = RationalPoly.from_roots([2, 3, 5])
    assert a.gcd(b) == RationalPoly.from_roots([2, 3])
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_radical_drops_multiplicity():
    f = RationalPoly.from_roots([1, 1, 1, -2, -2, 7])
    assert f.radical() == RationalPoly.from_roots([1, -2, 7])
    assert not f.is_squarefree()
    assert f.radical().is_squarefree()


def test_reduce_mod_rejects_p_in_denominator():
    f = RationalPoly((Fraction(1, 5), 1))
    assert f.reduce_mod(7) == PrimePoly(7, (3, 1))
    with pytest.raises(PDividesDenominator):
        f.reduce_mod(5)


def test_factor_table_row():
    p = 29
    f = PrimePoly(p, (1,))
    for fac in ((16, 1), (23, 1), (24, 1), (16, 24, 1), (23, 25, 1)):
        f = f * PrimePoly(p, fac)
    assert f.format_factored() == (
        "(x + 16) * (x + 23) * (x + 24) * (x^2 + 24*x + 16) * (x^2 + 25*x + 23)"
    )
    assert f.roots() == [5, 6, 13]


def test_factor_detects_pth_power():
    f = PrimePoly(29, (1, 1)) ** 29 * PrimePoly(29, (3, 1))
    fac = dict(f.factor())
    assert fac[PrimePoly(29, (1, 1))] == 29
    assert fac[PrimePoly(29, (3, 1))] == 1


def test_distinct_degree():
    p = 7
    f = PrimePoly(p, (1, 1)) * PrimePoly(p, (1, 0, 1)) * PrimePoly(p, (1, 1, 0, 1))
    degs = [d for d, _ in f.distinct_degree()]
    # x^2+1 is irreducible mod 7; x^3+x+1 is irreducible mod 7
    assert PrimePoly(p, (1, 1, 0, 1)).roots() == []
    assert degs == [1, 2, 3]


def test_large_degree_numpy_path_matches_python():
    p = 101
    a = PrimePoly(p, [(i * 37 + 5) % p for i in range(80)])
    b = PrimePoly(p, [(i * 11 + 3) % p for i in range(60)])
    prod = a * b
    # schoolbook check
    out = [0] * (a.degree + b.degree + 1)
    for i, x in enumerate(a.coefficients):
        for j, y in enumerate(b.coefficients):
            out[i + j] += x * y
    assert prod == PrimePoly(p, out)
    q, r = divmod(prod + PrimePoly(p, (1, 2, 3)), b)
    assert q * b + r == prod + PrimePoly(p, (1, 2, 3))
    assert r.degree < b.degree


def test_primes():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1) and is_prime(2) and not is_prime(91)


prime_st = st.sampled_from([5, 7, 11, 13, 29, 31, 61])
coeff_lists = st.lists(st.integers(0, 1000), min_size=1, max_size=12)


@settings(max_examples=60, deadline=None)
@given(prime_st, coeff_lists, coeff_lists)
def test_divmod_identity(p, a, b):
    fa, fb = PrimePoly(p, a), PrimePoly(p, b)
    if fb.is_zero():
        return
    q, r = divmod(fa, fb)
    assert q * fb + r == fa
    assert r.is_zero() or r.degree < fb.degree


@settings(max_examples=60, deadline=None)
@given(prime_st, coeff_lists)
def test_factor_roundtrip(p, a):
    f = PrimePoly(p, a)
    if f.degree < 1:
        return
    prod = PrimePoly(p, (f.leading_coefficient(),))
    for fac, mult in f.factor():
        prod = prod * fac**mult
    assert prod == f
    assert {(-fac[0]) % p for fac, _ in f.factor() if fac.degree == 1} == set(brute_roots(f))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=6))
def test_rational_radical_roots(roots):
    f = RationalPoly.from_roots(roots)
    assert f.radical() == RationalPoly.from_roots(sorted(set(roots)))


@settings(max_examples=40, deadline=None)
@given(prime_st, st.integers(0, 10**6), coeff_lists)
def test_powmod_matches_repeated_multiplication(p, k, mod):
    m = PrimePoly(p, mod + [1])
    if m.degree < 1:
        return
    k = k % 50
    x = PrimePoly.x(p)
    expected = PrimePoly(p, (1,)) % m
    for _ in range(k):
        expected = (expected * x) % m
    assert x.powmod(k, m) == expected


def test_sort_key_orders_by_degree_then_coefficients():
    p = 29
    fs = [PrimePoly(p, c) for c in ((16, 24, 1), (24, 1), (16, 1), (23, 25, 1), (23, 1))]
    got = [str(f) for f in sorted(fs, key=PrimePoly.sort_key)]
    assert got == ["x + 16", "x + 23", "x + 24", "x^2 + 24*x + 16", "x^2 + 25*x + 23"]


def test_brute_roots_agree_on_products():
    p = 13
    for roots in itertools.combinations(range(p), 3):
        f = PrimePoly.from_roots(p, roots)
        assert f.roots() == sorted(roots)
