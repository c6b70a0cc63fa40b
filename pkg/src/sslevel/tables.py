"""Static tables: principal moduli, weight-12 forms, modular relations and
the golden fixtures the verification suites compare against.

Everything is kept as text close to the printed notation and parsed on
demand, so a transcription error shows up as a failing cross-check rather
than as a silently wrong constant.  Each row carries the label of the
table it was copied from.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .polys import RationalPoly, parse_poly

SUPPORTED_LEVELS = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25)


@dataclass(frozen=True)
class Row:
    source: str
    key: object
    value: object


# principal moduli T_N as eta quotients
HAUPTMODUL_ETA = {
    2: Row("principal moduli, row 2", 2, "1^24/2^24"),
    3: Row("principal moduli, row 3", 3, "1^12/3^12"),
    4: Row("principal moduli, row 4", 4, "1^8/4^8"),
    5: Row("principal moduli, row 5", 5, "1^6/5^6"),
    6: Row("principal moduli, row 6", 6, "2^8*3^4/1^4*6^8"),
    7: Row("principal moduli, row 7", 7, "1^4/7^4"),
    8: Row("principal moduli, row 8", 8, "1^4*4^2/2^2*8^4"),
    9: Row("principal moduli, row 9", 9, "1^3/9^3"),
    10: Row("principal moduli, row 10", 10, "2^4*5^2/1^2*10^4"),
    12: Row("principal moduli, row 12", 12, "3^3*4^1/1^1*12^3"),
    13: Row("principal moduli, row 13", 13, "1^2/13^2"),
    16: Row("principal moduli, row 16", 16, "1^2*8^1/2^1*16^2"),
    18: Row("principal moduli, row 18", 18, "2^2*9^1/1^1*18^2"),
    25: Row("principal moduli, row 25", 25, "1/25"),
}

# weight-12 forms vanishing only at the cusp infinity
DELTA_ETA = {
    1: Row("level one discriminant", 1, "1^24"),
    2: Row("higher-level Delta, row 2", 2, "2^48/1^24"),
    3: Row("higher-level Delta, row 3", 3, "3^36/1^12"),
    4: Row("higher-level Delta, row 4", 4, "4^48/2^24"),
    5: Row("higher-level Delta, row 5", 5, "5^30/1^6"),
    6: Row("higher-level Delta, row 6", 6, "1^12*6^72/2^24*3^36"),
    7: Row("higher-level Delta, row 7", 7, "7^28/1^4"),
    8: Row("higher-level Delta, row 8", 8, "8^48/4^24"),
    9: Row("higher-level Delta, row 9", 9, "9^36/3^12"),
    10: Row("higher-level Delta, row 10", 10, "1^6*10^60/2^12*5^30"),
    12: Row("higher-level Delta, row 12", 12, "2^12*12^72/4^24*6^36"),
    13: Row("higher-level Delta, row 13", 13, "13^26/1^2"),
    16: Row("higher-level Delta, row 16", 16, "16^48/8^24"),
    18: Row("higher-level Delta, row 18", 18, "3^12*18^72/6^24*9^36"),
    25: Row("higher-level Delta, row 25", 25, "25^30/5^6"),
}

# j = numerator(T) / denominator(T)
MODULAR_RELATIONS = {
    1: Row("identity relation", 1, ("T", "1")),
    2: Row("modular relations, row 2", 2, ("(T+256)^3", "T^2")),
    3: Row("modular relations, row 3", 3, ("(T+27)(T+243)^3", "T^3")),
    4: Row("modular relations, row 4", 4, ("(T^2+256T+4096)^3", "(T+16)T^4")),
    5: Row("modular relations, row 5", 5, ("(T^2+250T+3125)^3", "T^5")),
    6: Row(
        "modular relations, row 6", 6,
        ("(T + 3)^3(T^3 + 225T^2 - 405T + 243)^3", "(T-1)^2(T-9)^6T^3"),
    ),
    7: Row("modular relations, row 7", 7, ("(T^2 + 13T + 49)(T^2 + 245T + 2401)^3", "T^7")),
    8: Row(
        "modular relations, row 8", 8,
        ("(T^4 + 256T^3 + 5120T^2 + 32768T + 65536)^3", "(T+4)(T+8)^2T^8"),
    ),
    9: Row(
        "modular relations, row 9", 9,
        ("(T+9)^3(T^3 + 243T^2 + 2187T + 6561)^3", "(T^2+9T+27)T^9"),
    ),
    10: Row(
        "modular relations, row 10", 10,
        ("(T^6 + 230T^5 + 275T^4 - 1500T^3 + 4375T^2 - 6250T + 3125)^3", "(T - 1)^2(T - 5)^10T^5"),
    ),
    12: Row(
        "modular relations, row 12", 12,
        (
            "(T^2 + 4T - 8)^3(T^6 + 228T^5 - 408T^4 - 128T^3 - 192T^2 + 768T - 512)^3",
            "(T - 2)(T - 1)^3(T + 2)^3(T - 4)^12T^4",
        ),
    ),
    13: Row(
        "modular relations, row 13", 13,
        ("(T^2 + 5T + 13)(T^4 + 247T^3 + 3380T^2 + 15379T + 28561)^3", "T^13"),
    ),
    16: Row(
        "modular relations, row 16", 16,
        (
            "(T^8 + 256T^7 + 5632T^6 + 53248T^5 + 282624T^4 + 917504T^3 + 1835008T^2"
            " + 2097152T + 1048576)^3",
            "(T + 2)(T + 4)^4(T^2+4T+8)T^16",
        ),
    ),
    18: Row(
        "modular relations, row 18", 18,
        (
            "(T^3 + 3T^2 - 9T + 9)^3(T^9 + 225T^8 - 1080T^7 + 3348T^6 - 8262T^5 + 16038T^4"
            " - 23328T^3 + 26244T^2 - 19683T + 6561)^3",
            "(T - 1)^2T^9(T - 3)^18(T^2 - 3T + 3)(T^2 + 3)^2",
        ),
    ),
    25: Row(
        "modular relations, row 25", 25,
        (
            "(T^10 + 250T^9 + 4375T^8 + 35000T^7 + 178125T^6 + 631250T^5 + 1640625T^4"
            " + 3125000T^3 + 4296875T^2 + 3906250T + 1953125)^3",
            "(T^4 + 5T^3 + 15T^2 + 25T + 25)T^25",
        ),
    ),
}

# g_p^(N): (factors raised to delta, factors raised to epsilon)
G_POLYNOMIALS = {
    1: Row("level one: x^delta (x-1728)^epsilon", 1, (["x"], ["x - 1728"])),
    2: Row("g polynomials, row 2", 2, (["x+256"], ["x-512", "x+64"])),
    3: Row("g polynomials, row 3", 3, (["x+27", "x+243"], ["x^2-486x-19683"])),
    4: Row(
        "g polynomials, row 4", 4,
        (["x^2 + 256x + 4096"], ["x + 32", "x^2 - 512x - 8192"]),
    ),
    5: Row(
        "g polynomials, row 5", 5,
        (["x^2 + 250x + 3125"], ["x^2 - 500x - 15625", "x^2+22x+125"]),
    ),
    6: Row(
        "g polynomials, row 6", 6,
        (
            ["x + 3", "x^3 + 225x^2 - 405x + 243"],
            ["x^2 + 18x - 27", "x^4 - 540x^3 + 270x^2 - 972x + 729"],
        ),
    ),
    7: Row(
        "g polynomials, row 7", 7,
        (
            ["x^2+13x+49", "x^2 + 245x + 2401"],
            ["x^4 - 490x^3 - 21609x^2 - 235298x - 823543"],
        ),
    ),
    8: Row(
        "g polynomials, row 8", 8,
        (
            ["x^4 + 256x^3 + 5120x^2 + 32768x + 65536"],
            ["x^2 + 32x + 128", "x^4 - 512x^3 - 10240x^2 - 65536x - 131072"],
        ),
    ),
    9: Row(
        "g polynomials, row 9", 9,
        (
            ["x + 9", "x^3 + 243x^2 + 2187x + 6561"],
            ["x^6 - 486x^5 - 24057x^4 - 367416x^3 - 2657205x^2 - 9565938x - 14348907"],
        ),
    ),
    10: Row(
        "g polynomials, row 10", 10,
        (
            ["x^6 + 230x^5 + 275x^4 - 1500x^3 + 4375x^2 - 6250x + 3125"],
            [
                "x^2 + 2x + 5",
                "x^2 + 20x - 25",
                "x^4 - 540x^3 + 1350x^2 - 1500x + 625",
                "x^2-2x+5",
            ],
        ),
    ),
    12: Row(
        "g polynomials, row 12", 12,
        (
            ["x^2 + 4x - 8", "x^6 + 228x^5 - 408x^4 - 128x^3 - 192x^2 + 768x - 512"],
            [
                "x^4 + 20x^3 - 48x^2 + 32x - 32",
                "x^8 - 536x^7 - 272x^6 + 3328x^5 + 6400x^4 - 20480x^3 + 4096x^2 + 16384x - 8192",
            ],
        ),
    ),
    13: Row(
        "g polynomials, row 13", 13,
        (
            ["x^2+5x+13", "x^4 + 247x^3 + 3380x^2 + 15379x + 28561"],
            [
                "x^6 - 494x^5 - 20618x^4 - 237276x^3 - 1313806x^2 - 3712930x - 4826809",
                "x^2+6x+13",
            ],
        ),
    ),
    16: Row(
        "g polynomials, row 16", 16,
        (
            [
                "x^8 + 256x^7 + 5632x^6 + 53248x^5 + 282624x^4 + 917504x^3 + 1835008x^2"
                " + 2097152x + 1048576"
            ],
            [
                "x^4 + 32x^3 + 192x^2 + 512x + 512",
                "x^8 - 512x^7 - 11264x^6 - 106496x^5 - 565248x^4 - 1835008x^3 - 3670016x^2"
                " - 4194304x - 2097152",
            ],
        ),
    ),
    18: Row(
        "g polynomials, row 18", 18,
        (
            [
                "x^3 + 3x^2 - 9x + 9",
                "x^9 + 225x^8 - 1080x^7 + 3348x^6 - 8262x^5 + 16038x^4 - 23328x^3"
                " + 26244x^2 - 19683x + 6561",
            ],
            [
                "x^6 + 18x^5 - 81x^4 + 216x^3 - 405x^2 + 486x - 243",
                "x^12 - 540x^11 + 1890x^10 - 4212x^9 + 13527x^8 - 48600x^7 + 129276x^6"
                " - 262440x^5 + 413343x^4 - 498636x^3 + 433026x^2 - 236196x + 59049",
            ],
        ),
    ),
    25: Row(
        "g polynomials, row 25", 25,
        (
            [
                "x^10 + 250x^9 + 4375x^8 + 35000x^7 + 178125x^6 + 631250x^5 + 1640625x^4"
                " + 3125000x^3 + 4296875x^2 + 3906250x + 1953125"
            ],
            [
                "x^4 + 10x^3 + 45x^2 + 100x + 125",
                "x^2+2x+5",
                "x^10 - 500x^9 - 18125x^8 - 163750x^7 - 871875x^6 - 3137500x^5 - 8203125x^4"
                " - 15625000x^3 - 21484375x^2 - 19531250x - 9765625",
            ],
        ),
    ),
}

# supersingular polynomials for X_0(2), factored
TABLE2 = {
    5: Row("ss polynomials for X_0(2), row 5", 5, "(x + 1)"),
    7: Row("ss polynomials for X_0(2), row 7", 7, "(x + 1) * (x + 6)"),
    11: Row("ss polynomials for X_0(2), row 11", 11, "(x + 3) * (x + 5) * (x + 9)"),
    13: Row("ss polynomials for X_0(2), row 13", 13, "(x + 1) * (x^2 + 8*x + 1)"),
    17: Row("ss polynomials for X_0(2), row 17", 17, "(x + 1) * (x + 16) * (x^2 + 13*x + 16)"),
    19: Row(
        "ss polynomials for X_0(2), row 19", 19,
        "(x + 1) * (x + 7) * (x + 11) * (x^2 + 9*x + 11)",
    ),
    23: Row(
        "ss polynomials for X_0(2), row 23", 23,
        "(x + 3) * (x + 5) * (x + 15) * (x + 16) * (x + 17) * (x + 18)",
    ),
    29: Row(
        "ss polynomials for X_0(2), row 29", 29,
        "(x + 16) * (x + 23) * (x + 24) * (x^2 + 24*x + 16) * (x^2 + 25*x + 23)",
    ),
}

# genus of X^p for X = X_0^+(2) and X_0(2)
TABLE3_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)
TABLE3 = {
    "2+": Row("genus of X^p, row X_0^+(2)", "2+", (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0)),
    "2-": Row("genus of X^p, row X_0(2)", "2-", (0, 0, 0, 0, 1, 1, 1, 0, 2, 1, 4, 3, 4, 1)),
}

# primes with the rationality property, genus zero curves
_APPENDIX_A_TEXT = """
2+   : 3, 5, 7, 11, 13, 17, 19, 23, 31, 47
2-   : 3, 5, 7, 11, 23
3+   : 2, 5, 7, 11, 13, 17, 23, 29
3-   : 2, 5, 11
4+   : 3, 5, 7, 11, 23
4-   : 3, 7
5+   : 2, 3, 7, 11, 19
5-   : 2
6+   : 5, 7, 11, 13
6+6  : 5, 11
6+3  : 5
7+   : 2, 3, 5, 17
7-   : 3
8+   : 3, 7
9+   : 2, 5
9-   : 2
10+  : 3, 7, 11
10+5 : 3
11+  : 2, 3, 5
12+  : 5
13+  : 2, 3
14+  : 3, 5
14+14: 3
15+  : 2, 7
15+15: 2
17+  : 2, 3, 7
19+  : 2, 5
20+  : 3
21+  : 2, 5
22+  : 3, 5
23+  : 2, 3
25+  : 2
26+  : 3
27+  : 2
29+  : 3
31+  : 2
33+  : 2
35+  : 2, 3
47+  : 2
55+  : 2
"""


def _parse_appendix_a():
    rows = {}
    for line in _APPENDIX_A_TEXT.strip().splitlines():
        label, primes = (s.strip() for s in line.split(":"))
        rows[label] = Row(f"rationality primes, row {label}", label, tuple(int(p) for p in primes.split(",")))
    return rows


APPENDIX_A = _parse_appendix_a()

# genus zero curves with no rationality primes
NON_MONSTROUS = {
    "25-": Row("non-monstrous genus zero curve X_0(25)", "25-", ()),
    "49+49": Row("non-monstrous genus zero curve X_0(49)+49", "49+49", ()),
    "50+50": Row("non-monstrous genus zero curve X_0(50)+50", "50+50", ()),
}

MONSTER_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71)

# classes of order 2p whose p-th power is 2A / 2B; bold = 2nd power is pA
TABLE4 = {
    "2A": Row(
        "order-2p classes over 2A", "2A",
        {
            3: (("6A", True), ("6D", False)),
            5: (("10A", True), ("10C", False)),
            7: (("14A", True),),
            11: (("22A", True),),
            13: (("26A", True),),
            17: (("34A", True),),
            19: (("38A", True),),
            23: (("46CD", True),),
            29: (),
            31: (("62AB", True),),
            41: (),
            47: (("94AB", True),),
            59: (),
            71: (),
        },
    ),
    "2B": Row(
        "order-2p classes over 2B", "2B",
        {
            3: (("6B", False), ("6C", True), ("6E", False), ("6F", False)),
            5: (("10B", True), ("10D", False), ("10E", False)),
            7: (("14B", True), ("14C", False)),
            11: (("22B", True),),
            13: (("26B", False),),
            17: (),
            19: (),
            23: (("46AB", True),),
            29: (),
            31: (),
            41: (),
            47: (),
            59: (),
            71: (),
        },
    ),
}

# twisted Euler characters, lambency X_0(2): class -> (n_g, chi_bar)
EULER_LAMBENCY_2 = Row(
    "twisted Euler characters, lambency X_0(2)", "2-",
    {"3A": (3, (6,)), "3B": (3, (0,)), "5A": (5, (4,)), "7AB": (7, (3,)), "11A": (11, (2,)), "23AB": (23, (1,))},
)
# lambency X_0(5): class -> (n_g, (chi_bar, chi))
EULER_LAMBENCY_5 = Row(
    "twisted Euler characters, lambency X_0(5)", "5-",
    {"2B": (2, (2, -2)), "2C": (2, (2, 2)), "3A": (3, (0, 0)), "6A": (3, (0, 0))},
)


# parsed accessors

@lru_cache(maxsize=None)
def relation_polys(n: int) -> tuple[RationalPoly, RationalPoly]:
    num, den = MODULAR_RELATIONS[n].value
    return parse_poly(num), parse_poly(den)


@lru_cache(maxsize=None)
def g_fixture(n: int) -> tuple[RationalPoly, RationalPoly]:
    """``(delta part, epsilon part)`` of the tabulated g polynomial."""
    d_parts, e_parts = G_POLYNOMIALS[n].value
    d = RationalPoly((1,))
    for f in d_parts:
        d = d * parse_poly(f)
    e = RationalPoly((1,))
    for f in e_parts:
        e = e * parse_poly(f)
    return d, e
