"""Exact q-multiple zeta and zeta-star values at roots of unity."""

from .cyclotomic import CycloElem, NonRational, as_rational, cyclotomic_poly, zeta_power
from .exact_core import Rational, RingMatrix, TruncSeries, UniPoly
from .qstirling import QContext, ZeroQNumber, stirling1, stirling2
from .zeta_values import (NPoly, Route, ZetaQuery, compute, f_poly, fit_npoly,
                          z_star_root_genfun)

__version__ = "0.1.0"

__all__ = [
    "CycloElem", "NonRational", "as_rational", "cyclotomic_poly", "zeta_power",
    "Rational", "RingMatrix", "TruncSeries", "UniPoly", "QContext",
    "ZeroQNumber", "stirling1", "stirling2", "NPoly", "Route", "ZetaQuery",
    "compute", "f_poly", "fit_npoly", "z_star_root_genfun",
]
