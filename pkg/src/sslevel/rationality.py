"""The rationality property: Q_p, prime sweeps and fixture comparisons.

``Q_p(X)`` counts supersingular points of X mod p not defined over F_p.
It equals twice the genus gained in passing from X to X^p, which is how it
is always computed here.  For the curves X_0(N) with a known principal
modulus it is also read off the supersingular polynomial (two roots per
quadratic factor) and the two numbers must agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import FixtureMismatch, InvariantViolation, MethodDisagreement, PrimeDividesLevel, UsageError
from .modcurves import CurveDescriptor, build_xp, genus_quotient, parse_descriptor
from .polys import PrimePoly, is_prime, primes_up_to
from .ssp import splitting_type, supersingular_poly
from .tables import (
    APPENDIX_A,
    EULER_LAMBENCY_2,
    EULER_LAMBENCY_5,
    NON_MONSTROUS,
    SUPPORTED_LEVELS,
    TABLE4,
)

DEFAULT_BOUND = 200

GENUS = "genus-difference"
SPLITTING = "polynomial-splitting"
BOTH = "both"


@dataclass(frozen=True)
class SupersingularReport:
    curve: CurveDescriptor
    prime: int
    q_p: int
    rational: bool
    method: str
    ss_poly: PrimePoly | None = None

    def tsv(self) -> str:
        return "\t".join(
            (str(self.curve), str(self.prime), str(self.q_p), str(self.rational).lower(), self.method)
        )


def _as_curve(x) -> CurveDescriptor:
    return parse_descriptor(x) if isinstance(x, str) else x


def q_p(x, p: int, polynomial: bool = True) -> SupersingularReport:
    """``Q_p(X)`` from the genus difference, cross-checked against ss_p when possible.

    Pass ``polynomial=False`` to skip the splitting computation.
    """
    x = _as_curve(x)
    if not is_prime(p):
        raise UsageError(f"{p} is not prime")
    if x.level % p == 0:
        raise PrimeDividesLevel(f"p = {p} divides the level of {x}")
    gain = genus_quotient(build_xp(x, p)) - genus_quotient(x)
    q = 2 * gain
    if q < 0:
        raise InvariantViolation(f"genus of {x}^{p} is smaller than the genus of {x}")
    method, ss = GENUS, None
    if polynomial and x.is_x0() and x.level in SUPPORTED_LEVELS and p >= 5:
        ss = supersingular_poly("E", p, x.level)
        _, quad = splitting_type(ss)
        if 2 * quad != q:
            raise MethodDisagreement(
                f"{x}, p = {p}: genus difference gives Q_p = {q}, "
                f"ss polynomial has {quad} quadratic factors"
            )
        method = BOTH
    return SupersingularReport(x, p, q, q == 0, method, ss)


@dataclass(frozen=True)
class RationalityResult:
    curve: CurveDescriptor
    bound: int
    primes: tuple
    reports: tuple = field(repr=False, default=())

    @property
    def note(self) -> str:
        return (
            f"certified for primes up to {self.bound} only; completeness beyond "
            "the bound rests on the growth of genus(X^p) with p, not on this computation"
        )


def rationality_primes(x, bound: int = DEFAULT_BOUND, polynomial: bool = True) -> RationalityResult:
    """All primes ``p <= bound`` not dividing the level with ``Q_p(X) = 0``."""
    x = _as_curve(x)
    if bound < 2:
        raise UsageError(f"bound must be at least 2, got {bound}")
    reports = tuple(
        q_p(x, p, polynomial) for p in primes_up_to(bound) if x.level % p
    )
    primes = tuple(r.prime for r in reports if r.rational)
    return RationalityResult(x, bound, primes, reports)


# checks against the embedded fixtures

@dataclass(frozen=True)
class CheckItem:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status}  {self.name}" + (f"  {self.detail}" if self.detail else "")


def _fmt(primes) -> str:
    return "{" + ", ".join(map(str, sorted(primes))) + "}"


def appendix_a_items(bound: int = DEFAULT_BOUND, polynomial: bool = True) -> list[CheckItem]:
    if bound < 100:
        raise UsageError(f"the appendix comparison needs bound >= 100, got {bound}")
    items = []
    for label, row in list(APPENDIX_A.items()) + list(NON_MONSTROUS.items()):
        got = rationality_primes(label, bound, polynomial).primes
        ok = tuple(got) == tuple(row.value)
        detail = _fmt(got) if ok else f"expected {_fmt(row.value)}, computed {_fmt(got)}"
        items.append(CheckItem(f"appendixA {label}", ok, detail))
    return items


def _raise_on_failure(items, what):
    bad = [i for i in items if not i.ok]
    if bad:
        raise FixtureMismatch(f"{len(bad)} {what} rows differ", rows=[i.line() for i in bad])
    return items


def verify_appendix_a(bound: int = DEFAULT_BOUND) -> list[CheckItem]:
    """Recompute every tabulated row; raises :class:`FixtureMismatch` on any difference."""
    return _raise_on_failure(appendix_a_items(bound), "rationality table")


def moonshine_items(bound: int = DEFAULT_BOUND) -> list[CheckItem]:
    """List-level comparisons with the conjugacy-class and Euler-character fixtures."""
    items = []
    # order-2p classes whose square is a Fricke class pA
    for cls, curve in (("2A", "2+"), ("2B", "2-")):
        bold = {p for p, entries in TABLE4[cls].value.items() if any(b for _, b in entries)}
        got = set(rationality_primes(curve, bound, polynomial=False).primes)
        items.append(
            CheckItem(
                f"moonshine {cls} Fricke primes vs {curve}",
                bold == got,
                f"{_fmt(bold)} vs {_fmt(got)}",
            )
        )
    # umbral lambencies: primes n_g carrying a nonzero twisted Euler character
    for row, curve in ((EULER_LAMBENCY_2, "2-"), (EULER_LAMBENCY_5, "5-")):
        level = parse_descriptor(curve).level
        shadow = {n for n, chars in row.value.values() if any(chars) and level % n}
        got = set(rationality_primes(curve, bound, polynomial=False).primes)
        items.append(
            CheckItem(
                f"umbral lambency {curve} nonzero shadows vs {curve}",
                shadow == got,
                f"{_fmt(shadow)} vs {_fmt(got)}",
            )
        )
    return items


def moonshine_crosscheck(bound: int = DEFAULT_BOUND) -> list[CheckItem]:
    return _raise_on_failure(moonshine_items(bound), "moonshine")


# output

def format_table(result: RationalityResult) -> str:
    """Aligned text table, one row per prime, followed by the prime list."""
    header = ("p", "Q_p", "rational", "method")
    rows = [(str(r.prime), str(r.q_p), "yes" if r.rational else "no", r.method) for r in result.reports]
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = [f"curve {result.curve}"]
    lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    lines.append(f"rationality primes: {', '.join(map(str, result.primes)) or 'none'}")
    lines.append(f"note: {result.note}")
    return "\n".join(lines)


def format_tsv(result: RationalityResult) -> str:
    return "\n".join(r.tsv() for r in result.reports)
