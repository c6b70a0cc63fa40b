import pytest

from sslevel.errors import DenominatorVanishes, FieldTooLarge, UsageError
from sslevel.oracle import (
    QuadExtElement,
    check_level1,
    check_leveln,
    nonresidue,
    roots_in_quadratic,
    supersingular_j_set,
)
from sslevel.polys import PrimePoly, primes_up_to
from sslevel.ssp import ModularRelation, modular_relation, supersingular_poly

PRIMES = [p for p in primes_up_to(60) if p >= 5]


def brute_count(a, b, p):
    """Projective points on y^2 = x^3 + a x + b over F_p, by direct enumeration."""
    squares = {}
    for y in range(p):
        squares[y * y % p] = squares.get(y * y % p, 0) + 1
    return 1 + sum(squares.get((x**3 + a * x + b) % p, 0) for x in range(p))


def brute_base_set(p):
    out = set()
    for j in range(p):
        if j == 0:
            a, b = 0, 1
        elif j == 1728 % p:
            a, b = 1, 0
        else:
            c = j * (1728 - j)
            a, b = 3 * c % p, 2 * c * (1728 - j) % p
        if brute_count(a, b, p) == p + 1:
            out.add(j)
    return out


@pytest.mark.parametrize("p,expected", [(5, {0}), (7, {6}), (13, {5})])
def test_base_examples(p, expected):
    assert set(supersingular_j_set(p, "base")) == expected


@pytest.mark.parametrize("p", PRIMES)
def test_base_set_matches_enumeration(p):
    assert set(supersingular_j_set(p, "base")) == brute_base_set(p)


@pytest.mark.parametrize("p", PRIMES)
def test_quadratic_set_structure(p):
    quad = supersingular_j_set(p, "quadratic")
    base = supersingular_j_set(p, "base")
    assert {z for z in quad if z.in_base_field()} == {QuadExtElement(p, j) for j in base}
    # Frobenius stability
    assert {z.conjugate() for z in quad} == set(quad)
    outside = [z for z in quad if not z.in_base_field()]
    assert len(outside) % 2 == 0
    assert len(base) + len(outside) == len(quad)
    assert len(quad) == supersingular_poly("E", p, 1).degree


def test_twist_independence():
    # a quadratic twist y^2 = x^3 + a d^2 x + b d^3 has the same j and the same verdict
    for p in (29, 31, 37):
        base = supersingular_j_set(p, "base")
        for j in list(range(2, p))[:3]:
            if j == 1728 % p:
                continue
            c = j * (1728 - j)
            a, b = 3 * c % p, 2 * c * (1728 - j) % p
            d = nonresidue(p)
            t1 = p + 1 - brute_count(a, b, p)
            t2 = p + 1 - brute_count(a * d * d % p, b * d**3 % p, p)
            assert t1 == -t2
            assert (t1 % p == 0) == (j in base)


def test_field_arithmetic():
    p = 11
    s = QuadExtElement(p, 0, 1)
    assert s * s == QuadExtElement(p, nonresidue(p))
    z = QuadExtElement(p, 3, 7)
    assert z * z.inverse() == QuadExtElement(p, 1)
    assert (z * z.conjugate()).in_base_field()
    assert (z * z.conjugate()).a == z.norm()
    with pytest.raises(ZeroDivisionError):
        QuadExtElement(p, 0).inverse()


def test_nonresidue_is_smallest():
    for p in PRIMES:
        ns = nonresidue(p)
        assert pow(ns, (p - 1) // 2, p) == p - 1
        assert all(pow(r, (p - 1) // 2, p) == 1 for r in range(1, ns))


def test_field_too_large():
    with pytest.raises(FieldTooLarge):
        supersingular_j_set(61, "quadratic")
    assert supersingular_j_set(61, "base")
    with pytest.raises(UsageError):
        supersingular_j_set(3, "base")


def test_roots_in_quadratic():
    p = 7
    f = PrimePoly(p, (1, 0, 1))  # x^2 + 1, irreducible mod 7
    roots = roots_in_quadratic(f)
    assert len(roots) == 2
    for r in roots:
        assert r * r + QuadExtElement(p, 1) == QuadExtElement(p, 0)
    assert roots_in_quadratic(PrimePoly(p, (-2, 0, 0, 1))) is None


def test_check_level1_examples():
    assert supersingular_poly("E", 5, 1) == PrimePoly(5, (0, 1))
    for p in (5, 13, 29):
        assert check_level1(p, supersingular_poly("E", p, 1))


def test_check_level1_rejects_wrong_poly():
    assert not check_level1(13, PrimePoly(13, (-4, 1)))
    assert not check_level1(29, supersingular_poly("E", 29, 1) * PrimePoly(29, (1, 1)))


def test_check_leveln_examples():
    assert check_leveln(5, 2, PrimePoly(5, (1, 1)), modular_relation(2))
    assert check_leveln(23, 2, supersingular_poly("E", 23, 2), modular_relation(2))


def test_check_leveln_negative_control():
    ss = supersingular_poly("E", 23, 2)
    corrupted = (ss // PrimePoly(23, (3, 1))) * PrimePoly(23, (1, 1))
    assert not check_leveln(23, 2, corrupted, modular_relation(2))


def test_check_leveln_denominator_vanishes():
    # t = 0 is a pole of r_2
    with pytest.raises(DenominatorVanishes):
        check_leveln(23, 2, PrimePoly(23, (0, 1)), modular_relation(2))


def test_check_leveln_rejects_p_dividing_level():
    with pytest.raises(UsageError):
        check_leveln(5, 10, PrimePoly(5, (1, 1)), modular_relation(10))
