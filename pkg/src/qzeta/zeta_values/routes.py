"""Dispatch a :class:`ZetaQuery` to any computation route."""

from __future__ import annotations

from fractions import Fraction

from . import brute, closed
from .genfun import z_star_root_genfun
from .records import (GENERIC_Q_ROUTES, PLAIN_ROUTES, STAR_ROUTES,
                      OutOfValidityRange, Route, ValueRecord, ZetaQuery)

__all__ = ["routes_for", "route_valid", "compute", "compute_value"]


def routes_for(qry: ZetaQuery) -> tuple[Route, ...]:
    """Routes implemented for the query's kind and q."""
    if not qry.at_root_of_unity:
        return GENERIC_Q_ROUTES
    return STAR_ROUTES if qry.star else PLAIN_ROUTES


def route_valid(qry: ZetaQuery, route: Route) -> str | None:
    """``None`` when the route applies to the query, else the reason it does not."""
    if route not in routes_for(qry):
        kind = "star" if qry.star else "non-star"
        return f"route {route} is not available for {kind} values at q={qry.q_label}"
    n, m, s = qry.n, qry.m, qry.s
    if s < 1 and route is not Route.BRUTE:
        return f"route {route} needs s >= 1"
    if route is Route.REC:
        if s not in (1, 2, 3):
            return "recurrences exist for s = 1, 2, 3 only"
        bound = closed.rec_bound(n, s)
        if m > bound:
            return f"recurrence for s={s} needs m <= {bound} at n={n}"
    if route is Route.SUM_RULE and m != 2:
        return "the sum rule is stated for m = 2 only"
    if route is Route.CLOSED_S1 and s != 1:
        return "closed form needs s = 1"
    if route in (Route.CLOSED_S2, Route.CLOSED_S2_RSTIRLING) and s != 2:
        return "closed form needs s = 2"
    if route is Route.M1_DET and m != 1:
        return "the single-index determinant needs m = 1"
    return None


def compute(qry: ZetaQuery, route: Route | str) -> ValueRecord:
    """Evaluate one route; raises OutOfValidityRange if it does not apply."""
    route = Route(route)
    why = route_valid(qry, route)
    if why is not None:
        raise OutOfValidityRange(why)
    n, m, s = qry.n, qry.m, qry.s
    if route is Route.BRUTE:
        return brute.z_star_brute(qry) if qry.star else brute.z_brute(qry)
    if route is Route.STIRLING:
        return brute.z_star_via_stirling(qry) if qry.star else brute.z_via_stirling(qry)
    if route is Route.BELL:
        value = closed.z_star_root_bell(n, m, s)
    elif route is Route.REC:
        value = closed.z_star_root_rec(n, m, s)
    elif route is Route.GENFUN:
        value = z_star_root_genfun(n, m, s)[m]
    elif route is Route.SUM_RULE:
        value = closed.z_star_root_sum_rule(n, m, s)
    elif route is Route.GENERAL:
        value = closed.z_root_general(n, m, s)
    elif route is Route.CLOSED_S1:
        value = closed.z_root_closed_s1(n, m)
    elif route is Route.CLOSED_S2:
        value = closed.z_root_closed_s2(n, m, "binomial")
    elif route is Route.CLOSED_S2_RSTIRLING:
        value = closed.z_root_closed_s2(n, m, "r_stirling")
    else:
        value = closed.z_root_m1_det(n, s)
    return ValueRecord(qry, route, value)


def compute_value(n: int, m: int, s: int, star: bool = True,
                  route: Route | str = Route.GENFUN, q=None) -> Fraction:
    return compute(ZetaQuery(n, m, s, q, star), route).value
