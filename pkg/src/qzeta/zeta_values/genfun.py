"""Generating-function engine via companion-matrix powers, and F_{s,l}.

Let ``alpha_1..alpha_s`` be the roots in Y of ``(1 - Y)^s - X``.  Then

    sum_m Z*_n(zeta_n; m, s) X^m = -n^s X / prod_i (alpha_i^n - 1).

The product is ``det(C^n - I)`` for the companion matrix C of the monic
version of ``(1 - Y)^s - X``; it is computed in Q[X]/(X^T) without ever
naming the roots.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb

from ..exact_core import (RingMatrix, TruncSeries, UniPoly, char_poly_fl,
                          det_fl, format_rational, mat_pow, series_inverse)
from .records import ValuationError

__all__ = ["root_poly_monic", "companion", "alpha_power_product",
           "z_star_root_genfun", "BiPoly", "compound_matrix", "f_poly"]


def root_poly_monic(s: int) -> list[UniPoly]:
    """Y-coefficients (over Q[X]) of ``(-1)^s ((1 - Y)^s - X)``, lowest first."""
    if s < 1:
        raise ValueError("s must be positive")
    sign = (-1) ** s
    coeffs = [UniPoly.constant(sign * comb(s, k) * (-1) ** k) for k in range(s + 1)]
    coeffs[0] = coeffs[0] - UniPoly((0, sign))
    assert coeffs[s] == 1
    return coeffs


def companion(coeffs: list, wrap=lambda p: p) -> RingMatrix:
    """Companion matrix of the monic polynomial with the given coefficients.

    Ones on the subdiagonal and ``-c_0, ..., -c_{d-1}`` in the last column,
    so that ``det(Y I - C)`` is the polynomial.  ``wrap`` converts each
    entry into the target ring.
    """
    d = len(coeffs) - 1
    zero, one = wrap(UniPoly()), wrap(UniPoly.constant(1))
    rows = []
    for i in range(d):
        row = [one if j == i - 1 else zero for j in range(d - 1)]
        row.append(wrap(-coeffs[i]))
        rows.append(row)
    return RingMatrix(rows)


def alpha_power_product(n: int, s: int, order: int) -> TruncSeries:
    """``prod_i (alpha_i^n - 1)`` modulo ``X^order``."""
    c = companion(root_poly_monic(s), lambda p: TruncSeries(p, order))
    cn = mat_pow(c, n)
    ident = RingMatrix.identity(s, TruncSeries(UniPoly.constant(1), order))
    d = det_fl(ident - cn)
    return d if s % 2 == 0 else -d


def z_star_root_genfun(n: int, m_max: int, s: int) -> list[Fraction]:
    """``[Z*_n(zeta_n; m, s) for m in 0..m_max]`` from the generating function."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    order = m_max + 2
    d = alpha_power_product(n, s, order)
    lead = -Fraction(n) ** s
    if d[0] != 0 or d[1] != lead:
        raise ValuationError(
            f"expected valuation 1 with X-coefficient {lead}, got "
            f"{[format_rational(c) for c in d.coeffs[:2]]} (n={n}, s={s})")
    series = series_inverse(d.shift_down(1)) * lead
    return [series[m] for m in range(m_max + 1)]


class BiPoly:
    """Polynomial in X and Y with Fraction coefficients, keyed by (i, j) for X^i Y^j."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        terms = {} if terms is None else terms
        self.terms = {k: Fraction(v) for k, v in terms.items() if v}

    @classmethod
    def X(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def Y(cls) -> BiPoly:
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, c) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def from_y_coeffs(cls, polys) -> BiPoly:
        """Build from ``polys[j]``, the X-polynomial multiplying ``Y^j``."""
        terms = {}
        for j, p in enumerate(polys):
            for i, c in enumerate(p.coeffs):
                if c:
                    terms[(i, j)] = c
        return cls(terms)

    @property
    def grid(self) -> list[list[Fraction]]:
        """``grid[i][j]`` = coefficient of X^i Y^j, no all-zero trailing rows or columns."""
        if not self.terms:
            return []
        rows = max(i for i, _ in self.terms) + 1
        cols = max(j for _, j in self.terms) + 1
        return [[self.terms.get((i, j), Fraction(0)) for j in range(cols)]
                for i in range(rows)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in o.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BiPoly:
        out = BiPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda k: (k[1], k[0])):
            c = self.terms[(i, j)]
            mono = "*".join(
                [v if e == 1 else f"{v}^{e}" for v, e in (("X", i), ("Y", j)) if e])
            a = abs(c)
            body = mono if (mono and a == 1) else (
                f"{format_rational(a)}*{mono}" if mono else format_rational(a))
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def compound_matrix(m: RingMatrix, l: int) -> RingMatrix:
    """l-th compound: minors on lexicographically ordered l-subsets."""
    subsets = list(itertools.combinations(range(m.dim), l))
    rows = []
    for rs in subsets:
        row = []
        for cs in subsets:
            minor = RingMatrix([[m[i, j] for j in cs] for i in rs])
            row.append(minor[0, 0] if l == 1 else det_fl(minor))
        rows.append(row)
    return RingMatrix(rows)


MAX_F_S = 6


def f_poly(s: int, l: int) -> BiPoly:
    """``F_{s,l}(X, Y) = prod over l-subsets of (1 - alpha_{i_1}...alpha_{i_l} Y)``.

    Computed as ``det(I - Y L)`` with L the l-th compound of the companion
    matrix, read off the characteristic polynomial of L.
    ``F_{s,0} = 1 - Y``.
    """
    if s < 1 or s > MAX_F_S:
        raise ValueError(f"s must be in 1..{MAX_F_S}")
    if not 0 <= l <= s:
        raise ValueError("need 0 <= l <= s")
    if l == 0:
        return BiPoly({(0, 0): 1, (0, 1): -1})
    lam = compound_matrix(companion(root_poly_monic(s)), l)
    cp = char_poly_fl(lam)
    dim = lam.dim
    # det(I - Y L) = sum_k cp[k] Y^(dim - k)
    return BiPoly.from_y_coeffs([cp[dim - j] for j in range(dim + 1)])
