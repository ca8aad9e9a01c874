"""All computation routes for q-multiple zeta and zeta-star values."""

from .brute import (summands, tuple_sum, z_brute, z_star_brute,
                    z_star_via_stirling, z_via_stirling)
from .closed import (rec_bound, z_root_closed_s1, z_root_closed_s2,
                     z_root_general, z_root_m1_det, z_star_root_bell,
                     z_star_root_rec, z_star_root_sum_rule)
from .fit import NPoly, fit_npoly, fit_samples, newton_interpolate
from .genfun import (BiPoly, alpha_power_product, compound_matrix, f_poly,
                     z_star_root_genfun)
from .records import (GENERIC_Q_ROUTES, PLAIN_ROUTES, STAR_ROUTES,
                      NoStabilization, OutOfValidityRange, Route,
                      ValuationError, ValueRecord, ZetaQuery)
from .routes import compute, compute_value, route_valid, routes_for

__all__ = [
    "summands", "tuple_sum", "z_brute", "z_star_brute", "z_star_via_stirling",
    "z_via_stirling", "rec_bound", "z_root_closed_s1", "z_root_closed_s2",
    "z_root_general", "z_root_m1_det", "z_star_root_bell", "z_star_root_rec",
    "z_star_root_sum_rule", "NPoly", "fit_npoly", "fit_samples",
    "newton_interpolate", "BiPoly", "alpha_power_product", "compound_matrix",
    "f_poly", "z_star_root_genfun", "GENERIC_Q_ROUTES", "PLAIN_ROUTES",
    "STAR_ROUTES", "NoStabilization", "OutOfValidityRange", "Route",
    "ValuationError", "ValueRecord", "ZetaQuery", "compute", "compute_value",
    "route_valid", "routes_for",
]
