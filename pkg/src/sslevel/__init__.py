"""Supersingular polynomials, Atkin-Lehner quotient genera and rationality primes.

The main entry points:

>>> from sslevel import supersingular_poly, genus_quotient, parse_descriptor
>>> supersingular_poly("E", 13, 2).format_factored()
'(x + 1) * (x^2 + 8*x + 1)'
>>> genus_quotient(parse_descriptor("2+"))
0
"""

from .errors import SSLevelError
from .modcurves import (
    CurveDescriptor,
    build_xp,
    class_number,
    fixed_points,
    genus_quotient,
    genus_x0,
    parse_descriptor,
)
from .oracle import check_level1, check_leveln, supersingular_j_set
from .polys import PrimePoly, RationalPoly, parse_poly
from .qseries import QSeries, bernoulli, eisenstein, eta_quotient, kz_series, parse_eta_spec
from .rationality import moonshine_crosscheck, q_p, rationality_primes, verify_appendix_a
from .ssp import (
    decompose_weight,
    delta_n,
    f_poly,
    g_poly,
    hauptmodul,
    modular_relation,
    splitting_type,
    supersingular_poly,
    to_hauptmodul_poly,
    verify_modular_relation,
)

__version__ = "0.1.0"

__all__ = [
    "SSLevelError",
    "CurveDescriptor",
    "build_xp",
    "class_number",
    "fixed_points",
    "genus_quotient",
    "genus_x0",
    "parse_descriptor",
    "check_level1",
    "check_leveln",
    "supersingular_j_set",
    "PrimePoly",
    "RationalPoly",
    "parse_poly",
    "QSeries",
    "bernoulli",
    "eisenstein",
    "eta_quotient",
    "kz_series",
    "parse_eta_spec",
    "moonshine_crosscheck",
    "q_p",
    "rationality_primes",
    "verify_appendix_a",
    "decompose_weight",
    "delta_n",
    "f_poly",
    "g_poly",
    "hauptmodul",
    "modular_relation",
    "splitting_type",
    "supersingular_poly",
    "to_hauptmodul_poly",
    "verify_modular_relation",
]
