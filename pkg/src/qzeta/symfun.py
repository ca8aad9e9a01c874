"""Complete Bell polynomials, Newton-type transforms and Trudi determinants.

Throughout, ``a`` is a power-sum sequence ``a_1, a_2, ...`` and ``b`` the
matching complete homogeneous sequence, with ``b_0 = 1``.  Sequences are
passed as plain Python sequences indexed from 0, so ``a[0]`` holds
``a_1``.  Entries may be any exact ring elements that divide by integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

__all__ = [
    "SeqView", "bell_complete", "h_from_powersums", "e_from_powersums",
    "hessenberg_det", "gotrudi", "partitions_by_multiplicity",
]


@dataclass(frozen=True)
class SeqView:
    """A 1-indexed view of a power-sum (``role="a"``) or target (``"b"``) sequence."""

    role: str
    values: tuple

    def __post_init__(self):
        if self.role not in ("a", "b"):
            raise ValueError(f"role must be 'a' or 'b', got {self.role!r}")
        object.__setattr__(self, "values", tuple(self.values))

    def __getitem__(self, i: int):
        if i == 0:
            return Fraction(1)
        return self.values[i - 1]

    def __len__(self) -> int:
        return len(self.values)


def partitions_by_multiplicity(m: int):
    """Yield multiplicity vectors ``(i_1, ..., i_m)`` with ``sum j*i_j = m``."""

    def rec(part: int, remaining: int):
        if part == 0:
            if remaining == 0:
                yield ()
            return
        for mult in range(remaining // part + 1):
            for rest in rec(part - 1, remaining - mult * part):
                yield rest + (mult,)

    if m < 0:
        return
    yield from rec(m, m)


def _check_len(xs: Sequence, m: int) -> None:
    if len(xs) < m:
        raise ValueError(f"need at least {m} terms, got {len(xs)}")


def hessenberg_det(first_col: Sequence, super_diag: Sequence,
                   band: Sequence | None = None):
    """Determinant of a lower-Hessenberg matrix with Toeplitz interior.

    The ``d x d`` matrix ``H`` (1-indexed) has ``H[i][1] = first_col[i-1]``,
    ``H[i][i+1] = super_diag[i-1]`` and, for ``2 <= j <= i``,
    ``H[i][j] = band[i-j]``.  When ``band`` is omitted the interior
    repeats the first column, ``H[i][j] = first_col[i-j]``.

    Uses the last-row expansion
    ``D_k = sum_j (-1)^(k-j) H[k][j] prod_{i=j}^{k-1} H[i][i+1] D_{j-1}``.
    """
    d = len(first_col)
    if d == 0:
        return Fraction(1)
    if band is None:
        band = first_col
    if len(super_diag) < d - 1 or len(band) < d - 1:
        raise ValueError("inconsistent Hessenberg dimensions")

    def entry(i: int, j: int):
        return first_col[i - 1] if j == 1 else band[i - j]

    dets = [Fraction(1)]
    for k in range(1, d + 1):
        acc = entry(k, k) * dets[k - 1]
        chain = None
        for j in range(k - 1, 0, -1):
            chain = super_diag[j - 1] if chain is None else super_diag[j - 1] * chain
            term = entry(k, j) * chain * dets[j - 1]
            acc = acc - term if (k - j) % 2 else acc + term
        dets.append(acc)
    return dets[d]


def _bell_partition(xs: Sequence, m: int):
    total = Fraction(0)
    for mult in partitions_by_multiplicity(m):
        coef = Fraction(factorial(m))
        for mu in mult:
            coef /= factorial(mu)
        term = coef
        for j, mu in enumerate(mult, start=1):
            if mu:
                term = term * (xs[j - 1] * Fraction(1, factorial(j))) ** mu
        total = total + term
    return total


def _bell_det(xs: Sequence, m: int):
    # Y_m(x) = det of the form (ii) matrix with a_j = x_j / (j-1)!
    a = [xs[j - 1] * Fraction(1, factorial(j - 1)) for j in range(1, m + 1)]
    sup = [-i for i in range(1, m)]
    return hessenberg_det(a, sup)


def bell_complete(xs: Sequence, m: int, method: str = "both"):
    """Complete exponential Bell polynomial ``Y_m(x_1, ..., x_m)``.

    ``method`` picks the partition sum, the Hessenberg determinant, or
    ``"both"`` (the default), which computes the two and insists they agree.
    """
    _check_len(xs, m)
    if m == 0:
        return Fraction(1)
    if method == "partition":
        return _bell_partition(xs, m)
    if method == "determinant":
        return _bell_det(xs, m)
    if method == "both":
        p, d = _bell_partition(xs, m), _bell_det(xs, m)
        if p != d:
            raise ArithmeticError(f"Bell routes disagree at m={m}: {p} != {d}")
        return d
    raise ValueError(f"unknown method {method!r}")


def h_from_powersums(g: Sequence, k: int, method: str = "both"):
    """Complete homogeneous value h_K from power sums, ``K! h_K = Y_K(g_1, 1!g_2, ...)``."""
    _check_len(g, k)
    xs = [factorial(j) * g[j] for j in range(k)]
    return bell_complete(xs, k, method) * Fraction(1, factorial(k))


def e_from_powersums(g: Sequence, k: int):
    """Elementary symmetric value e_K via ``K e_K = sum (-1)^(i-1) g_i e_{K-i}``."""
    _check_len(g, k)
    e = [Fraction(1)]
    for kk in range(1, k + 1):
        acc = Fraction(0)
        for i in range(1, kk + 1):
            t = g[i - 1] * e[kk - i]
            acc = acc + t if i % 2 else acc - t
        e.append(acc * Fraction(1, kk))
    return e[k]


def _form_i(a, m):
    total = Fraction(0)
    for mult in partitions_by_multiplicity(m):
        term = Fraction(1)
        for j, mu in enumerate(mult, start=1):
            if mu:
                term = term * (a[j] * Fraction(1, j)) ** mu * Fraction(1, factorial(mu))
        total = total + term
    return total


def _form_ii(a, m):
    col = [a[j] for j in range(1, m + 1)]
    return hessenberg_det(col, [-i for i in range(1, m)]) * Fraction(1, factorial(m))


def _form_iii(b, n):
    col = [j * b[j] for j in range(1, n + 1)]
    band = [b[j] for j in range(1, n + 1)]
    det = hessenberg_det(col, [1] * (n - 1), band)
    return det if n % 2 else -det


def _form_iv(a, m):
    bs = [Fraction(1)]
    for k in range(1, m + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            acc = acc + a[i] * bs[k - i]
        bs.append(acc * Fraction(1, k))
    return bs[m]


def _form_v(b, n):
    aa = [None]
    for k in range(1, n + 1):
        acc = k * b[k]
        for j in range(1, k):
            acc = acc - b[j] * aa[k - j]
        aa.append(acc)
    return aa[n]


_FORMS: dict[str, tuple[str, Callable]] = {
    "i": ("a", _form_i),
    "ii": ("a", _form_ii),
    "iii": ("b", _form_iii),
    "iv": ("a", _form_iv),
    "v": ("b", _form_v),
}


def gotrudi(form: str, seq, m: int):
    """Evaluate one of the five equivalent power-sum/target transforms.

    Forms ``i``, ``ii``, ``iv`` take the power sums ``a`` and return
    ``b_m``; forms ``iii`` and ``v`` take ``b`` and return ``a_m``.
    ``seq`` may be a :class:`SeqView` or a plain sequence (``seq[0]`` is
    the first term).
    """
    try:
        role, fn = _FORMS[form]
    except KeyError:
        raise ValueError(f"unknown form {form!r}") from None
    view = seq if isinstance(seq, SeqView) else SeqView(role, tuple(seq))
    if view.role != role:
        raise ValueError(f"form {form} expects a {role!r} sequence, got {view.role!r}")
    if m < 1:
        if role == "a" and m == 0:
            return Fraction(1)
        raise ValueError("index must be positive")
    _check_len(view, m)
    return fn(view, m)
