import pytest
from hypothesis import given, settings, strategies as st

from sslevel.errors import (
    InvalidDiscriminant,
    NotExactDivisor,
    ParseError,
    PrimeDividesLevel,
)
from sslevel.modcurves import (
    CurveDescriptor,
    build_xp,
    class_number,
    exact_divisors,
    fixed_points,
    genus_quotient,
    genus_x0,
    parse_descriptor,
)
from sslevel.polys import primes_up_to
from sslevel.tables import APPENDIX_A, MONSTER_PRIMES, NON_MONSTROUS, SUPPORTED_LEVELS


def test_parse_examples():
    x = parse_descriptor("2+")
    assert (x.level, x.involutions) == (2, frozenset({1, 2}))
    assert parse_descriptor("6+6").involutions == frozenset({1, 6})
    assert parse_descriptor("3-").involutions == frozenset({1})
    assert parse_descriptor("30+6,10,15").involutions == frozenset({1, 6, 10, 15})
    assert parse_descriptor("30+6,10").involutions == frozenset({1, 6, 10, 15})


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_descriptor("2*")
    with pytest.raises(NotExactDivisor):
        parse_descriptor("12+2")


def test_descriptor_roundtrip():
    for label in list(APPENDIX_A) + list(NON_MONSTROUS):
        x = parse_descriptor(label)
        assert parse_descriptor(str(x)) == x
    # prime power levels have a single nontrivial exact divisor
    assert str(parse_descriptor("49+49")) == "49+"
    assert str(parse_descriptor("14+14")) == "14+14"


def test_genus_x0_examples():
    assert genus_x0(1).genus == 0
    g11 = genus_x0(11)
    assert (g11.index, g11.elliptic2, g11.elliptic3, g11.cusps, g11.genus) == (12, 0, 0, 2, 1)
    assert genus_x0(50).genus == 2
    assert genus_x0(37).genus == 2


def test_genus_zero_levels():
    zero = [n for n in range(1, 60) if genus_x0(n).genus == 0]
    assert tuple(zero) == SUPPORTED_LEVELS


@pytest.mark.parametrize(
    "d,h",
    [(-3, 1), (-4, 1), (-7, 1), (-8, 1), (-11, 1), (-12, 1), (-15, 2), (-16, 1), (-20, 2),
     (-23, 3), (-24, 2), (-28, 1), (-31, 3), (-44, 3), (-47, 5), (-56, 4), (-71, 7),
     (-84, 4), (-163, 1)],
)
def test_class_numbers(d, h):
    assert class_number(d) == h


@pytest.mark.parametrize("d", [-1, -2, -5, 0, 4])
def test_class_number_rejects(d):
    with pytest.raises(InvalidDiscriminant):
        class_number(d)


def test_fixed_point_examples():
    assert fixed_points(2, 2) == 2
    assert fixed_points(11, 11) == 4
    assert fixed_points(37, 37) == 2


def test_fixed_points_rejects_non_exact():
    with pytest.raises(NotExactDivisor):
        fixed_points(12, 2)


@pytest.mark.parametrize("p", [q for q in primes_up_to(200) if q > 3])
def test_fricke_fixed_points_prime_level(p):
    # classical count for w_p on X_0(p): h(-4p), plus h(-p) when p = 3 mod 4
    expected = class_number(-4 * p) + (class_number(-p) if p % 4 == 3 else 0)
    assert fixed_points(p, p) == expected


def test_genus_quotient_examples():
    assert genus_quotient(parse_descriptor("2+")) == 0
    assert genus_quotient(parse_descriptor("94+")) == 0
    assert genus_quotient(parse_descriptor("58+")) == 1
    assert build_xp(parse_descriptor("2+"), 29) == parse_descriptor("58+")


def test_build_xp_examples():
    assert str(build_xp(parse_descriptor("1-"), 7)) == "7+"
    assert build_xp(parse_descriptor("2+"), 3) == CurveDescriptor(6, frozenset({1, 2, 3, 6}))
    assert str(build_xp(parse_descriptor("2-"), 13)) == "26+13"
    with pytest.raises(PrimeDividesLevel):
        build_xp(parse_descriptor("6+"), 3)


def test_monster_primes_are_genus_zero_fricke_quotients():
    zero = [p for p in primes_up_to(71) if genus_quotient(CurveDescriptor.plus(p)) == 0]
    assert tuple(zero) == MONSTER_PRIMES


def test_genus_one_fricke_quotients():
    # published list of primes with X_0^+(p) of genus one, up to 131
    ones = [p for p in primes_up_to(131) if genus_quotient(CurveDescriptor.plus(p)) == 1]
    assert ones == [37, 43, 53, 61, 79, 83, 89, 101, 131]


def test_trivial_group_is_x0():
    for n in range(1, 120):
        assert genus_quotient(CurveDescriptor.x0(n)) == genus_x0(n).genus


def test_appendix_curves_have_genus_zero():
    for label in list(APPENDIX_A) + list(NON_MONSTROUS):
        assert genus_quotient(parse_descriptor(label)) == 0, label


def test_xp_genus_never_drops():
    for label in APPENDIX_A:
        x = parse_descriptor(label)
        base = genus_quotient(x)
        for p in primes_up_to(100):
            if x.level % p:
                assert genus_quotient(build_xp(x, p)) >= base


@st.composite
def descriptors(draw):
    n = draw(st.integers(1, 400))
    divs = exact_divisors(n)
    chosen = draw(st.lists(st.sampled_from(divs), max_size=3))
    return CurveDescriptor(n, frozenset(chosen) | {1})


@settings(max_examples=150, deadline=None)
@given(descriptors())
def test_riemann_hurwitz_integrality(x):
    g = genus_quotient(x)
    assert g >= 0
    size = len(x.involutions)
    assert size & (size - 1) == 0


@settings(max_examples=80, deadline=None)
@given(descriptors(), st.data())
def test_genus_monotone_in_group(x, data):
    # a larger group gives a smaller quotient
    extra = data.draw(st.sampled_from(exact_divisors(x.level)))
    bigger = CurveDescriptor(x.level, x.involutions | {extra})
    assert genus_quotient(bigger) <= genus_quotient(x)
