"""q-generalized (r, s)-Stirling numbers of both kinds.

Coefficients live in a field chosen by :class:`QContext`: the rationals
(any rational q, including the limit q = 1) or Q(zeta_n) for q a power of
zeta_n.  The level s may be negative for the second kind.

First kind, from ``x^r * prod_{i=r}^{n-1} (x - [i]_q^s)``::

    [n, k] = [n-1, k-1] + [n-1]_q^s [n-1, k]

Second kind, from ``x^n = sum_k {n, k} (x)_k``::

    {n, k} = {n-1, k-1} + [k]_q^s {n-1, k}

Rows start at ``n = r`` with the single entry ``(r, r) = 1``.  For
``n < r`` the value is taken as 1 at ``(0, 0)`` and 0 elsewhere.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import CycloElem, zeta_power

__all__ = [
    "ZeroQNumber", "QContext", "StirlingTable", "qnum", "qnum_pow",
    "stirling1", "stirling2", "stirling1_direct", "stirling2_direct",
    "r_stirling1_q1",
]


class ZeroQNumber(ZeroDivisionError):
    """A negative power of a vanishing q-number was requested."""


@dataclass(frozen=True, eq=False)
class QContext:
    """A value of q inside a concrete field.

    ``cyclo_n`` is ``None`` for the rationals, otherwise q lies in
    Q(zeta_n).  Two contexts are equal when they describe the same q in
    the same field.
    """

    q: object
    cyclo_n: int | None = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def rational(cls, q) -> QContext:
        return cls(Fraction(q))

    @classmethod
    def root_of_unity(cls, n: int, power: int = 1) -> QContext:
        return cls(zeta_power(n, power), n)

    @property
    def key(self):
        if self.cyclo_n is None:
            return ("Q", self.q)
        return ("cyclo", self.cyclo_n, self.q)

    def __eq__(self, other):
        if not isinstance(other, QContext):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def one(self):
        if self.cyclo_n is None:
            return Fraction(1)
        return CycloElem.one(self.cyclo_n)

    def zero(self):
        return self.one() * 0

    def coerce(self, x):
        return self.one() * x


def qnum(ctx: QContext, k: int):
    """[k]_q = 1 + q + ... + q^(k-1); equals k at q = 1."""
    if k < 0:
        raise ValueError("q-numbers are defined here for k >= 0 only")
    cache = ctx._cache
    hit = cache.get(k)
    if hit is not None:
        return hit
    acc = ctx.zero()
    power = ctx.one()
    for _ in range(k):
        acc = acc + power
        power = power * ctx.q
    cache.setdefault(k, acc)
    return acc


def qnum_pow(ctx: QContext, k: int, s: int):
    """([k]_q)^s, with ZeroQNumber when s < 0 and [k]_q = 0."""
    base = qnum(ctx, k)
    if s < 0 and not base:
        raise ZeroQNumber(f"[{k}]_q vanishes at q = {ctx.q}; cannot raise to {s}")
    if s >= 0:
        out = ctx.one()
        for _ in range(s):
            out = out * base
        return out
    inv = 1 / base
    out = ctx.one()
    for _ in range(-s):
        out = out * inv
    return out


class _Poison:
    """Table slot whose value would need a negative power of a zero q-number."""

    __slots__ = ("exc",)

    def __init__(self, exc: ZeroQNumber):
        self.exc = exc


class StirlingTable:
    """Row-by-row memoized triangle for one (context, kind, r, s)."""

    def __init__(self, ctx: QContext, kind: str, r: int, s: int):
        if kind not in ("first", "second"):
            raise ValueError(f"unknown Stirling kind {kind!r}")
        if r < 1:
            raise ValueError("r must be a positive integer")
        if kind == "first" and s < 1:
            raise ValueError("first-kind level s must be positive")
        self.ctx, self.kind, self.r, self.s = ctx, kind, r, s
        self._rows: list[list] = []   # _rows[i] is row n = r + i, indices k = 0..n
        self._lock = threading.Lock()

    def _weight(self, n_prev: int, k: int):
        if self.kind == "first":
            return qnum_pow(self.ctx, n_prev, self.s)
        return qnum_pow(self.ctx, k, self.s)

    def _grow(self, n: int) -> None:
        with self._lock:
            zero, one = self.ctx.zero(), self.ctx.one()
            if not self._rows:
                self._rows.append([zero] * self.r + [one])
            while self.r + len(self._rows) - 1 < n:
                prev = self._rows[-1]
                m = self.r + len(self._rows)
                row = [zero] * (m + 1)
                for k in range(self.r, m + 1):
                    left = prev[k - 1] if k - 1 < len(prev) else zero
                    here = prev[k] if k < len(prev) else zero
                    if isinstance(left, _Poison) or isinstance(here, _Poison):
                        row[k] = left if isinstance(left, _Poison) else here
                    elif not here:
                        row[k] = left
                    else:
                        try:
                            row[k] = left + self._weight(m - 1, k) * here
                        except ZeroQNumber as exc:
                            row[k] = _Poison(exc)
                self._rows.append(row)

    def __call__(self, n: int, k: int):
        if n < 0 or k < 0:
            raise ValueError("Stirling indices must be nonnegative")
        if n < self.r:
            return self.ctx.one() if n == k == 0 else self.ctx.zero()
        if k > n or k < self.r:
            return self.ctx.zero()
        if self.r + len(self._rows) - 1 < n:
            self._grow(n)
        value = self._rows[n - self.r][k]
        if isinstance(value, _Poison):
            raise ZeroQNumber(f"entry ({n}, {k}) depends on a vanishing q-number: "
                              f"{value.exc}")
        return value


_TABLES: dict = {}
_TABLES_LOCK = threading.Lock()


def _table(ctx: QContext, kind: str, r: int, s: int) -> StirlingTable:
    key = (ctx, kind, r, s)
    tab = _TABLES.get(key)
    if tab is None:
        with _TABLES_LOCK:
            tab = _TABLES.setdefault(key, StirlingTable(ctx, kind, r, s))
    return tab


def stirling1(ctx: QContext, n: int, k: int, r: int = 1, s: int = 1):
    """Unsigned q-(r,s)-Stirling number of the first kind [n, k]."""
    return _table(ctx, "first", r, s)(n, k)


def stirling2(ctx: QContext, n: int, k: int, r: int = 1, s: int = 1):
    """q-(r,s)-Stirling number of the second kind {n, k}; s may be negative."""
    return _table(ctx, "second", r, s)(n, k)


def _prod(ctx, factors):
    out = ctx.one()
    for f in factors:
        out = out * f
    return out


def stirling1_direct(ctx: QContext, n: int, m: int, r: int = 1, s: int = 1,
                     form: str = "reciprocal"):
    """Explicit sums for the first kind.

    ``form="reciprocal"`` evaluates [n, m] for ``r <= m <= n-1`` as
    ``([n-1]!/[r-1]!)^s`` times the sum of ``1/([i_1]...[i_{m-r}])^s``
    over strictly increasing indices in ``[r, n-1]``.

    The other forms evaluate [n, n-m] for ``n - m >= r``:
    ``"strict"`` sums ``([i_1]...[i_m])^s`` over ``r <= i_1 < ... < i_m <= n-1``,
    ``"weak"`` sums ``([i_1][i_2+1]...[i_m+m-1])^s`` over
    ``r <= i_1 <= ... <= i_m <= n-m``, and ``"nested"`` evaluates the
    same weak sum as iterated partial sums from the innermost index out.
    """
    if form == "reciprocal":
        if not r <= m <= n - 1:
            raise ValueError(f"need r <= m <= n-1, got r={r}, m={m}, n={n}")
        pre = _prod(ctx, (qnum_pow(ctx, i, s) for i in range(r, n)))
        total = ctx.zero()
        for idx in itertools.combinations(range(r, n), m - r):
            total = total + _prod(ctx, (qnum_pow(ctx, i, -s) for i in idx))
        return pre * total
    if n - m < r:
        raise ValueError(f"need n - m >= r, got n={n}, m={m}, r={r}")
    if form == "strict":
        total = ctx.zero()
        for idx in itertools.combinations(range(r, n), m):
            total = total + _prod(ctx, (qnum_pow(ctx, i, s) for i in idx))
        return total
    if form == "weak":
        total = ctx.zero()
        for idx in itertools.combinations_with_replacement(range(r, n - m + 1), m):
            total = total + _prod(ctx, (qnum_pow(ctx, i + t, s)
                                        for t, i in enumerate(idx)))
        return total
    if form == "nested":
        if m == 0:
            return ctx.one()
        top = n - m
        # inner[i] = sum over i_1 <= ... <= i_t = i of the first t factors
        inner = {i: qnum_pow(ctx, i, s) for i in range(r, top + 1)}
        for t in range(1, m):
            running = ctx.zero()
            nxt = {}
            for i in range(r, top + 1):
                running = running + inner[i]
                nxt[i] = qnum_pow(ctx, i + t, s) * running
            inner = nxt
        total = ctx.zero()
        for i in range(r, top + 1):
            total = total + inner[i]
        return total
    raise ValueError(f"unknown form {form!r}")


def stirling2_direct(ctx: QContext, n: int, k: int, r: int = 1, s: int = 1,
                     form: str = "nested"):
    """Explicit sums for the second kind.

    ``form="nested"`` evaluates {n, k} for ``r+1 <= k <= n`` through the
    iterated sum over ``0 <= i_1 <= ... <= i_{k-r} <= n-k`` of
    ``[r]^(i_1 s) [r+1]^((i_2-i_1)s) ... [k]^((n-k-i_{k-r})s)``.

    ``form="weak"`` evaluates {n, n-k} for ``n - k >= r`` as the sum of
    ``([i_1]...[i_k])^s`` over ``r <= i_1 <= ... <= i_k <= n-k``.
    """
    if form == "nested":
        if not r + 1 <= k <= n:
            raise ValueError(f"need r+1 <= k <= n, got r={r}, k={k}, n={n}")
        depth = k - r
        top = n - k
        total = ctx.zero()
        for idx in itertools.combinations_with_replacement(range(top + 1), depth):
            bounds = (0,) + idx + (top,)
            term = ctx.one()
            for j in range(depth + 1):
                e = bounds[j + 1] - bounds[j]
                if e:
                    term = term * qnum_pow(ctx, r + j, e * s)
            total = total + term
        return total
    if form == "weak":
        if n - k < r:
            raise ValueError(f"need n - k >= r, got n={n}, k={k}, r={r}")
        total = ctx.zero()
        for idx in itertools.combinations_with_replacement(range(r, n - k + 1), k):
            total = total + _prod(ctx, (qnum_pow(ctx, i, s) for i in idx))
        return total
    raise ValueError(f"unknown form {form!r}")


def r_stirling1_q1(n: int, k: int, r: int) -> Fraction:
    """Classical r-Stirling number of the first kind (q = 1, s = 1)."""
    return stirling1(_Q1, n, k, r, 1)


_Q1 = QContext.rational(1)
