"""Exact scalar, polynomial, truncated power series and matrix arithmetic.

Scalars are :class:`fractions.Fraction`.  Polynomials are dense and
immutable.  Matrices hold entries from any commutative Q-algebra that
supports ``+ - *`` and division by an integer, which covers Fractions,
:class:`UniPoly` and :class:`TruncSeries`.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational", "UniPoly", "TruncSeries", "RingMatrix",
    "poly_arith", "ext_gcd", "series_inverse", "mat_mul", "mat_pow",
    "char_poly_fl", "det_fl", "format_rational", "parse_rational",
]


def format_rational(x) -> str:
    """Serialize a rational as ``"p/q"`` (or ``"p"`` when ``q == 1``)."""
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def _is_scalar(x) -> bool:
    return isinstance(x, _RationalABC)


def _strip(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


class UniPoly:
    """Dense univariate polynomial with Fraction coefficients.

    ``coeffs[i]`` is the coefficient of ``X**i``; the zero polynomial has
    no coefficients at all.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = tuple(_strip([Fraction(c) for c in coeffs]))

    @classmethod
    def constant(cls, c) -> UniPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> UniPoly:
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> UniPoly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if _is_scalar(other):
            return self.coeffs == UniPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"UniPoly({[format_rational(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return self.to_str("X")

    def to_str(self, var: str = "X") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = format_rational(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{format_rational(a)}*{mono}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def _coerce(self, other) -> UniPoly | None:
        if isinstance(other, UniPoly):
            return other
        if _is_scalar(other):
            return UniPoly.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(-c for c in self.coeffs)

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
        if _is_scalar(other):
            return UniPoly(c * other for c in self.coeffs)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # scalar division only; polynomial division goes through divmod
        if _is_scalar(other):
            if not other:
                raise ZeroDivisionError("polynomial divided by zero scalar")
            inv = 1 / Fraction(other)
            return UniPoly(c * inv for c in self.coeffs)
        return NotImplemented

    def __pow__(self, e: int) -> UniPoly:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other) -> tuple[UniPoly, UniPoly]:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        db = o.degree
        inv_lead = 1 / o.lead()
        if len(rem) - 1 < db:
            return UniPoly(), self
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] * inv_lead
            quot[k] = c
            if c:
                for j, cb in enumerate(o.coeffs):
                    rem[k + j] -= c * cb
        return UniPoly(quot), UniPoly(rem[:db])

    def __floordiv__(self, other) -> UniPoly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> UniPoly:
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = 0 * x if not _is_scalar(x) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        return self / self.lead()

    def truncate(self, order: int) -> UniPoly:
        return UniPoly(self.coeffs[:order])

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, ``None`` for zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None


def poly_arith(a: UniPoly, b: UniPoly, op: str):
    """Dispatch ``add``/``sub``/``mul``/``divrem`` on two polynomials."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "divrem":
        return divmod(a, b)
    raise ValueError(f"unknown polynomial operation {op!r}")


def ext_gcd(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Return ``(g, u, v)`` with ``g = u*a + v*b`` the monic gcd."""
    if a.is_zero() and b.is_zero():
        raise ValueError("ext_gcd of two zero polynomials")
    r0, r1 = a, b
    s0, s1 = UniPoly.constant(1), UniPoly()
    t0, t1 = UniPoly(), UniPoly.constant(1)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.lead()
    return r0 / lc, s0 / lc, t0 / lc


class TruncSeries:
    """Element of Q[X]/(X^order)."""

    __slots__ = ("poly", "order")

    def __init__(self, poly, order: int):
        if order < 1:
            raise ValueError("truncation order must be positive")
        if not isinstance(poly, UniPoly):
            poly = UniPoly(poly)
        self.poly = poly.truncate(order)
        self.order = order

    @property
    def coeffs(self) -> tuple:
        return self.poly.coeffs

    def __getitem__(self, i: int) -> Fraction:
        return self.poly[i]

    def _check(self, other) -> TruncSeries | None:
        if isinstance(other, TruncSeries):
            if other.order != self.order:
                raise ValueError(
                    f"truncation orders differ: {self.order} vs {other.order}")
            return other
        if _is_scalar(other) or isinstance(other, UniPoly):
            return TruncSeries(other if isinstance(other, UniPoly)
                               else UniPoly.constant(other), self.order)
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncSeries):
            return self.order == other.order and self.poly == other.poly
        if _is_scalar(other) or isinstance(other, UniPoly):
            return self.poly == TruncSeries(
                other if isinstance(other, UniPoly) else UniPoly.constant(other),
                self.order).poly
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("TruncSeries", self.order, self.poly.coeffs))

    def __repr__(self) -> str:
        return f"TruncSeries({self.poly.to_str()}, order={self.order})"

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return TruncSeries(self.poly + o.poly, self.order)

    __radd__ = __add__

    def __neg__(self) -> TruncSeries:
        return TruncSeries(-self.poly, self.order)

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return TruncSeries(self.poly - o.poly, self.order)

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return TruncSeries(o.poly - self.poly, self.order)

    def __mul__(self, other):
        if _is_scalar(other):
            return TruncSeries(self.poly * other, self.order)
        o = self._check(other)
        if o is None:
            return NotImplemented
        a, b, t = self.poly.coeffs, o.poly.coeffs, self.order
        if not a or not b:
            return TruncSeries(UniPoly(), t)
        out = [Fraction(0)] * min(t, len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j in range(min(len(b), t - i)):
                out[i + j] += ca * b[j]
        return TruncSeries(UniPoly(out), t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return TruncSeries(self.poly / other, self.order)
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self * series_inverse(o)

    def valuation(self) -> int | None:
        return self.poly.valuation()

    def shift_down(self, k: int) -> TruncSeries:
        """Divide by ``X**k``; the low ``k`` coefficients must vanish."""
        if any(self.poly[i] for i in range(k)):
            raise ValueError(f"series is not divisible by X^{k}")
        if k >= self.order:
            raise ValueError("shift exhausts the truncation order")
        return TruncSeries(UniPoly(self.poly.coeffs[k:]), self.order - k)


def series_inverse(d: TruncSeries) -> TruncSeries:
    """Multiplicative inverse in Q[X]/(X^T), by the triangular recurrence."""
    c0 = d[0]
    if not c0:
        raise ZeroDivisionError("series has zero constant term")
    t = d.order
    dc = d.coeffs
    inv0 = 1 / c0
    out = [inv0]
    for k in range(1, t):
        acc = Fraction(0)
        for j in range(1, min(k, len(dc) - 1) + 1):
            acc += dc[j] * out[k - j]
        out.append(-acc * inv0)
    return TruncSeries(UniPoly(out), t)


class RingMatrix:
    """Square matrix over a commutative Q-algebra."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(r) for r in rows)
        dim = len(rows)
        if dim == 0 or any(len(r) != dim for r in rows):
            raise ValueError("RingMatrix must be square and non-empty")
        self.rows = rows

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, dim: int, one=Fraction(1)) -> RingMatrix:
        zero = one - one
        return cls([[one if i == j else zero for j in range(dim)]
                    for i in range(dim)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"RingMatrix({self.rows!r})"

    def one(self):
        e = self.rows[0][0]
        return e - e + 1

    def __add__(self, other: RingMatrix) -> RingMatrix:
        _same_dim(self, other)
        return RingMatrix([[a + b for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: RingMatrix) -> RingMatrix:
        _same_dim(self, other)
        return RingMatrix([[a - b for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.rows, other.rows)])

    def __mul__(self, other):
        if isinstance(other, RingMatrix):
            return mat_mul(self, other)
        return RingMatrix([[a * other for a in r] for r in self.rows])

    def scale(self, c) -> RingMatrix:
        return RingMatrix([[c * a for a in r] for r in self.rows])

    def trace(self):
        acc = self.rows[0][0]
        for i in range(1, self.dim):
            acc = acc + self.rows[i][i]
        return acc

    def map(self, f) -> RingMatrix:
        return RingMatrix([[f(a) for a in r] for r in self.rows])


def _same_dim(a: RingMatrix, b: RingMatrix) -> None:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")


def mat_mul(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    _same_dim(a, b)
    d = a.dim
    cols = list(zip(*b.rows))
    out = []
    for r in a.rows:
        row = []
        for c in cols:
            acc = r[0] * c[0]
            for k in range(1, d):
                acc = acc + r[k] * c[k]
            row.append(acc)
        out.append(row)
    return RingMatrix(out)


def mat_pow(m: RingMatrix, e: int) -> RingMatrix:
    """``m**e`` by binary exponentiation."""
    if e < 0:
        raise ValueError("negative matrix power")
    result = RingMatrix.identity(m.dim, m.one())
    base = m
    while e:
        if e & 1:
            result = mat_mul(result, base)
        e >>= 1
        if e:
            base = mat_mul(base, base)
    return result


def char_poly_fl(m: RingMatrix) -> list:
    """Coefficients ``c[0..d]`` of ``det(t*I - m)`` by Faddeev-LeVerrier.

    Only integer divisions occur, so the entries may live in any
    commutative Q-algebra, zero divisors included.
    """
    d = m.dim
    one = m.one()
    ident = RingMatrix.identity(d, one)
    c = [None] * (d + 1)
    c[d] = one
    mk = RingMatrix.identity(d, one - one)
    for k in range(1, d + 1):
        mk = mat_mul(m, mk) + ident.scale(c[d - k + 1])
        c[d - k] = -(mat_mul(m, mk).trace()) / k
    return c


def det_fl(m: RingMatrix):
    """Determinant via the Faddeev-LeVerrier characteristic polynomial."""
    c0 = char_poly_fl(m)[0]
    return c0 if m.dim % 2 == 0 else -c0
