"""Reconstruct values as exact polynomials in n by stabilized interpolation."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from ..exact_core import UniPoly
from .closed import rec_bound
from .records import NoStabilization, Route
from .routes import compute_value

__all__ = ["NPoly", "newton_interpolate", "fit_npoly", "fit_samples",
           "min_valid_n"]

DEFAULT_MAX_DEGREE = 40


@dataclass(frozen=True)
class NPoly:
    """A polynomial in n together with the sample points that produced it."""

    poly: UniPoly
    samples: tuple = field(default=(), compare=False)

    @classmethod
    def from_factors(cls, scale, factors: Sequence[Sequence]) -> NPoly:
        """``scale * prod(factors)``, each factor an ascending coefficient list."""
        p = UniPoly.constant(Fraction(scale))
        for f in factors:
            p = p * UniPoly(f)
        return cls(p)

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self.poly.coeffs

    def __call__(self, n) -> Fraction:
        return self.poly(Fraction(n))

    def __str__(self) -> str:
        return self.poly.to_str("n")


def newton_interpolate(xs: Sequence, ys: Sequence) -> UniPoly:
    """Interpolating polynomial through the points, via divided differences."""
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    coef = [Fraction(y) for y in ys]
    k = len(xs)
    for j in range(1, k):
        for i in range(k - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = UniPoly()
    for i in range(k - 1, -1, -1):
        p = p * UniPoly((-Fraction(xs[i]), 1)) + coef[i]
    return p


def fit_samples(sampler: Callable[[int], Fraction], n_start: int = 2,
                confirm: int = 2, max_degree: int = DEFAULT_MAX_DEGREE) -> NPoly:
    """Interpolate ``sampler(n)`` for ``n = n_start, n_start+1, ...``.

    Points are added until ``confirm`` consecutive new points lie on the
    previous interpolant (each adds a zero top divided difference).
    """
    xs: list[int] = []
    ys: list[Fraction] = []
    diag: list[Fraction] = []   # f[x_k], f[x_{k-1}, x_k], ..., f[x_0..x_k]
    newton: list[Fraction] = []
    zeros = 0
    n = n_start
    while True:
        y = Fraction(sampler(n))
        new = [y]
        for j in range(1, len(xs) + 1):
            new.append((new[j - 1] - diag[j - 1]) / (n - xs[-j]))
        xs.append(n)
        ys.append(y)
        diag = new
        newton.append(new[-1])
        zeros = zeros + 1 if (len(newton) > 1 and new[-1] == 0) else 0
        if zeros >= confirm:
            break
        if len(xs) > max_degree + confirm + 1:
            raise NoStabilization(
                f"no stable interpolant up to degree {max_degree} "
                f"(sampled n = {xs[0]}..{xs[-1]})")
        n += 1
    p = UniPoly()
    for i in range(len(newton) - 1, -1, -1):
        p = p * UniPoly((-Fraction(xs[i]), 1)) + newton[i]
    return NPoly(p, tuple(zip(xs, ys)))


def min_valid_n(m: int, s: int, route: Route) -> int:
    """Smallest n from which every larger n is valid for the route."""
    route = Route(route)
    if route is Route.REC and m > 0:
        n = 2
        while rec_bound(n, s) < m:
            n += 1
        return n
    return 2


def fit_npoly(m: int, s: int, star: bool = True, route: Route | str | None = None,
              n_start: int | None = None, confirm: int = 2,
              max_degree: int = DEFAULT_MAX_DEGREE) -> NPoly:
    """Value at q = zeta_n as an exact polynomial in n.

    Defaults to the generating-function route for star values and to the
    power-sum route for non-star values.
    """
    if route is None:
        route = Route.GENFUN if star else Route.GENERAL
    route = Route(route)
    if n_start is None:
        n_start = min_valid_n(m, s, route)
    return fit_samples(lambda n: compute_value(n, m, s, star, route),
                       n_start, confirm, max_degree)
