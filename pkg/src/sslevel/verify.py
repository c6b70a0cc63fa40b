"""Named verification suites, each a list of PASS/FAIL items.

Every embedded fixture is exercised by at least one suite: the principal
moduli and the relations by ``appendixE``, the weight 12 forms and the
supersingular rows by ``table2``, the g polynomials by ``appendixD``, the
genus rows by ``table3``, the prime lists by ``appendixA`` and the group
data by ``moonshine``.
"""

from __future__ import annotations

from .modcurves import build_xp, genus_quotient, parse_descriptor
from .oracle import check_level1, check_leveln
from .polys import primes_up_to
from .rationality import CheckItem, appendix_a_items, moonshine_items
from .ssp import g_parts, modular_relation, supersingular_poly, verify_modular_relation
from .tables import SUPPORTED_LEVELS, TABLE2, TABLE3, TABLE3_PRIMES, g_fixture

ORACLE_BOUND = 60
ORACLE_LEVELS = (2, 3, 5, 7, 13)


def suite_appendix_a():
    return appendix_a_items()


def suite_appendix_d():
    items = []
    for n in SUPPORTED_LEVELS:
        above_0, above_1728 = g_parts(n)
        fix_0, fix_1728 = g_fixture(n)
        ok = above_0 == fix_0 and above_1728 == fix_1728
        items.append(CheckItem(f"appendixD level {n}", ok, "" if ok else f"derived {above_0} | {above_1728}"))
    return items


def suite_appendix_e():
    return [
        CheckItem(f"appendixE level {n}", verify_modular_relation(n))
        for n in SUPPORTED_LEVELS
    ]


def suite_table2():
    items = []
    for p, row in TABLE2.items():
        got = supersingular_poly("E", p, 2).format_factored()
        ok = got == row.value
        items.append(CheckItem(f"table2 p={p}", ok, got if ok else f"expected {row.value}, computed {got}"))
    return items


def suite_table3():
    items = []
    for label, row in TABLE3.items():
        x = parse_descriptor(label)
        for p, expected in zip(TABLE3_PRIMES, row.value):
            got = genus_quotient(build_xp(x, p))
            items.append(
                CheckItem(f"table3 {label} p={p}", got == expected, f"genus {got}" + ("" if got == expected else f", expected {expected}"))
            )
    return items


def suite_oracle():
    items = []
    for p in primes_up_to(ORACLE_BOUND):
        if p < 5:
            continue
        items.append(CheckItem(f"oracle level 1 p={p}", check_level1(p, supersingular_poly("E", p, 1))))
        for n in ORACLE_LEVELS:
            if n % p == 0:
                continue
            ok = check_leveln(p, n, supersingular_poly("E", p, n), modular_relation(n))
            items.append(CheckItem(f"oracle level {n} p={p}", ok))
    return items


def suite_moonshine():
    return moonshine_items()


SUITES = {
    "appendixA": suite_appendix_a,
    "appendixD": suite_appendix_d,
    "appendixE": suite_appendix_e,
    "table2": suite_table2,
    "table3": suite_table3,
    "oracle": suite_oracle,
    "moonshine": suite_moonshine,
}


def run_suite(name: str) -> list[CheckItem]:
    return SUITES[name]()
