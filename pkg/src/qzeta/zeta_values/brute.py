"""Literal summation and the Stirling-number bridge."""

from __future__ import annotations

from fractions import Fraction

from ..cyclotomic import CycloElem, as_rational, zeta_power
from ..qstirling import QContext, qnum, stirling1, stirling2
from .records import Route, ValueRecord, ZetaQuery

__all__ = ["summands", "tuple_sum", "z_star_brute", "z_brute",
           "z_via_stirling", "z_star_via_stirling"]


def _check_generic_q(q: Fraction, n: int) -> None:
    for i in range(1, n):
        if q ** i == 1:
            raise ValueError(f"q = {q} makes 1 - q^{i} vanish")


def summands(qry: ZetaQuery, galois: int = 1) -> list:
    """``[1/(1 - q^i)^s for i in 1..n-1]`` in the query's field.

    ``galois`` replaces zeta_n by zeta_n^galois for root-of-unity queries.
    """
    n, s = qry.n, qry.s
    if qry.q is None:
        one = CycloElem.one(n)
        return [(one - zeta_power(n, galois * i)) ** (-s) for i in range(1, n)]
    _check_generic_q(qry.q, n)
    return [(1 - qry.q ** i) ** (-s) for i in range(1, n)]


def tuple_sum(xs: list, m: int, weak: bool, one):
    """Sum of ``xs[i_1] * ... * xs[i_m]`` over increasing index tuples.

    Weakly increasing tuples when ``weak``, strictly increasing otherwise.
    Prefix products are shared between tuples with a common prefix.
    """
    total = one * 0
    size = len(xs)

    def walk(start: int, depth: int, prefix):
        nonlocal total
        if depth == 0:
            total = total + prefix
            return
        for i in range(start, size):
            walk(i if weak else i + 1, depth - 1, prefix * xs[i])

    walk(0, m, one)
    return total


def _one(qry: ZetaQuery):
    return CycloElem.one(qry.n) if qry.q is None else Fraction(1)


def _finish(qry: ZetaQuery, value, route: Route) -> ValueRecord:
    if qry.q is None:
        value = as_rational(value)
    return ValueRecord(qry, route, value)


def z_star_brute(qry: ZetaQuery, galois: int = 1) -> ValueRecord:
    """Sum over ``1 <= i_1 <= ... <= i_m <= n-1`` of the product of summands."""
    total = tuple_sum(summands(qry, galois), qry.m, True, _one(qry))
    return _finish(qry, total, Route.BRUTE)


def z_brute(qry: ZetaQuery, galois: int = 1) -> ValueRecord:
    """Sum over ``1 <= i_1 < ... < i_m <= n-1``; zero once ``m > n-1``."""
    total = tuple_sum(summands(qry, galois), qry.m, False, _one(qry))
    return _finish(qry, total, Route.BRUTE)


def _context(qry: ZetaQuery) -> QContext:
    if qry.q is None:
        return QContext.root_of_unity(qry.n)
    _check_generic_q(qry.q, qry.n)
    return QContext.rational(qry.q)


def z_via_stirling(qry: ZetaQuery) -> ValueRecord:
    """``[n, m+1]^(1,s) / ((1-q)^(ms) ([n-1]_q!)^s)``."""
    if qry.s < 1:
        raise ValueError("the Stirling bridge needs s >= 1")
    ctx = _context(qry)
    n, m, s = qry.n, qry.m, qry.s
    fact = ctx.one()
    for i in range(1, n):
        fact = fact * qnum(ctx, i)
    denom = (ctx.one() - ctx.q) ** (m * s) * fact ** s
    return _finish(qry, stirling1(ctx, n, m + 1, 1, s) / denom, Route.STIRLING)


def z_star_via_stirling(qry: ZetaQuery) -> ValueRecord:
    """``{n+m-1, n-1}^(1,-s) / (1-q)^(ms)``."""
    if qry.s < 1:
        raise ValueError("the Stirling bridge needs s >= 1")
    ctx = _context(qry)
    n, m, s = qry.n, qry.m, qry.s
    value = stirling2(ctx, n + m - 1, n - 1, 1, -s)
    value = value / (ctx.one() - ctx.q) ** (m * s)
    return _finish(qry, value, Route.STIRLING)
