"""Closed forms, determinant/Bell expressions and recurrences at q = zeta_n.

Every function here returns a Fraction; none of them touches the
cyclotomic field.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from ..qstirling import r_stirling1_q1
from ..symfun import bell_complete, e_from_powersums, gotrudi, hessenberg_det
from .records import OutOfValidityRange

__all__ = [
    "binom", "z_root_closed_s1", "z_root_closed_s2", "z_root_m1_det",
    "z_root_general", "z_star_root_bell", "z_star_root_sum_rule",
    "z_star_root_rec", "rec_bound",
]


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def z_root_closed_s1(n: int, m: int) -> Fraction:
    return Fraction(binom(n - 1, m), m + 1)


def z_root_closed_s2(n: int, m: int, variant: str = "binomial") -> Fraction:
    """Value at s = 2, either from binomials or from r-Stirling numbers with r = m+1."""
    if variant == "binomial":
        return Fraction(binom(n - 1, m) + (-1) ** m * binom(n - 1, 2 * m + 1),
                        n * (m + 1))
    if variant == "r_stirling":
        acc = 0
        for k in range(m + 1):
            acc += r_stirling1_q1(2 * m + 2, m + k + 2, m + 1) * (-n) ** k
        return Fraction(2 * factorial(m), factorial(2 * m + 2)) * binom(n - 1, m) * acc
    raise ValueError(f"unknown variant {variant!r}")


@lru_cache(maxsize=4096)
def z_root_m1_det(n: int, s: int) -> Fraction:
    """The single-index value as an ``s x s`` lower-Hessenberg determinant.

    First column ``(j/(j+1)) C(n-1, j)``, diagonal band at offset d equal to
    ``C(n-1, d+1)/(d+2)``, ones on the superdiagonal.
    """
    if s < 1:
        raise ValueError("s must be positive")
    first = [Fraction(j, j + 1) * binom(n - 1, j) for j in range(1, s + 1)]
    band = [Fraction(binom(n - 1, d + 1), d + 2) for d in range(s)]
    return hessenberg_det(first, [1] * (s - 1), band)


def _power_sums(n: int, m: int, s: int) -> list[Fraction]:
    return [z_root_m1_det(n, j * s) for j in range(1, m + 1)]


def z_root_general(n: int, m: int, s: int) -> Fraction:
    """Elementary symmetric value from the power sums ``Z_n(zeta;1,js)``."""
    return e_from_powersums(_power_sums(n, m, s), m)


def z_star_root_bell(n: int, m: int, s: int, method: str = "both") -> Fraction:
    """``Y_m(g_1, 1!g_2, 2!g_3, ...)/m!`` with ``g_j = Z_n(zeta;1,js)``.

    ``method="both"`` also evaluates the equivalent Hessenberg determinant
    with superdiagonal ``-1, -2, ...`` and raises if the two disagree.
    """
    if m == 0:
        return Fraction(1)
    g = _power_sums(n, m, s)
    xs = [factorial(j) * g[j] for j in range(m)]
    if method in ("bell", "both"):
        bell = bell_complete(xs, m, "partition") / factorial(m)
        if method == "bell":
            return bell
    det = gotrudi("ii", g, m)
    if method == "determinant":
        return det
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    if bell != det:
        raise ArithmeticError(f"Bell sum {bell} != determinant {det} at n={n}, m={m}, s={s}")
    return det


def z_star_root_sum_rule(n: int, m: int, s: int) -> Fraction:
    """``Z*(2,s) = Z(2,s) + Z(1,2s)``; only m = 2 is supported."""
    if m != 2:
        raise OutOfValidityRange("the sum rule is stated for m = 2 only")
    return z_root_general(n, 2, s) + z_root_m1_det(n, 2 * s)


def rec_bound(n: int, s: int) -> int:
    """Largest m accepted by :func:`z_star_root_rec`."""
    if s == 1:
        return n - 1
    if s == 2:
        return n // 2 - 1
    if s == 3:
        return n // 3 - 1
    raise OutOfValidityRange(f"no recurrence is available for s = {s}")


def _coef_s1(n: int, d: int) -> Fraction:
    return Fraction((-1) ** (d + 1), d + 1) * binom(n - 1, d)


def _coef_s2(n: int, d: int) -> Fraction:
    return -Fraction(2 * binom(n, 2 * d + 2) + (-1) ** d * binom(n, d + 1), n * n)


def _coef_s3(n: int, d: int) -> Fraction:
    acc = Fraction(0)
    for l in range(0, (d + 1) // 2 + 1):
        for k in range(l, d - l + 2):
            acc += (Fraction(3 ** (d - l - k + 1) * (-2) ** (k - l), d - l + 1)
                    * binom(d - l + 1, k) * binom(k, l)
                    * binom(n + d - l - k, 3 * d - 3 * l + 2))
    acc += Fraction((-1) ** d, d + 1) * (binom(n - 1, 3 * d + 2) + binom(n - 1, d))
    return -acc / (n * n)


_COEFS = {1: _coef_s1, 2: _coef_s2, 3: _coef_s3}


def z_star_root_rec(n: int, m: int, s: int) -> Fraction:
    """Recurrence in m for s = 1, 2, 3 from the base value 1 at m = 0.

    Each step is ``Z*(m) = sum_{j<m} c(m-j) Z*(j)`` with the s-specific
    coefficient ``c``.  Only ``m <= rec_bound(n, s)`` is accepted.
    """
    if s not in _COEFS:
        raise OutOfValidityRange(f"no recurrence is available for s = {s}")
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m > 0 and m > rec_bound(n, s):
        raise OutOfValidityRange(
            f"recurrence for s={s} needs m <= {rec_bound(n, s)} at n={n}, got m={m}")
    coef = _COEFS[s]
    vals = [Fraction(1)]
    for k in range(1, m + 1):
        vals.append(sum((coef(n, k - j) * vals[j] for j in range(k)), Fraction(0)))
    return vals[m]
