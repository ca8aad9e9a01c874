"""Exact arithmetic in the cyclotomic field Q(zeta_n).

An element is stored in the power basis ``1, z, ..., z^(phi(n)-1)`` where
``z`` is the class of X in Q[X]/(Phi_n).  Internally the coefficients are
kept as an integer vector over one positive common denominator, which
keeps the inner loops on machine-friendly ints.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalABC

from .exact_core import UniPoly, ext_gcd

__all__ = [
    "NonRational", "CycloElem", "cyclotomic_poly", "zeta_power",
    "cyclo_arith", "cyclo_inverse", "as_rational", "totient",
]


class NonRational(ArithmeticError):
    """A cyclotomic element expected to be rational is not."""

    def __init__(self, elem: CycloElem):
        self.elem = elem
        super().__init__(f"element of Q(zeta_{elem.n}) is not rational: "
                         f"{[str(c) for c in elem.coeffs]}")


_PHI_CACHE: dict[int, UniPoly] = {}
_PHI_LOCK = threading.Lock()


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def cyclotomic_poly(n: int) -> UniPoly:
    """Phi_n, from X^n - 1 divided by Phi_d over the proper divisors d."""
    if n < 1:
        raise ValueError("cyclotomic_poly needs n >= 1")
    cached = _PHI_CACHE.get(n)
    if cached is not None:
        return cached
    num = UniPoly.monomial(n) - 1
    den = UniPoly.constant(1)
    for d in _divisors(n)[:-1]:
        den = den * cyclotomic_poly(d)
    phi, rem = divmod(num, den)
    assert rem.is_zero()
    with _PHI_LOCK:
        return _PHI_CACHE.setdefault(n, phi)


def _phi_int(n: int) -> tuple[int, ...]:
    return tuple(int(c) for c in cyclotomic_poly(n).coeffs)


class CycloElem:
    """Element of Q(zeta_n); immutable and hashable."""

    __slots__ = ("n", "_num", "_den")

    def __init__(self, n: int, coeffs=(), *, _raw=None):
        self.n = n
        if _raw is not None:
            num, den = _raw
        else:
            fr = [Fraction(c) for c in coeffs]
            phi = _phi_int(n)
            d = len(phi) - 1
            den = 1
            for c in fr:
                den = den * c.denominator // gcd(den, c.denominator)
            num = [int(c * den) for c in fr]
            if len(num) > d:
                num = _reduce(num, phi)
            num = num + [0] * (d - len(num))
        self._num, self._den = _normalize(num, den)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def degree(self) -> int:
        """phi(n), the length of the coefficient vector."""
        return len(self._num)

    @classmethod
    def from_rational(cls, n: int, c) -> CycloElem:
        c = Fraction(c)
        d = len(_phi_int(n)) - 1
        return cls(n, _raw=([c.numerator] + [0] * (d - 1), c.denominator))

    @classmethod
    def one(cls, n: int) -> CycloElem:
        return cls.from_rational(n, 1)

    @classmethod
    def zero(cls, n: int) -> CycloElem:
        return cls.from_rational(n, 0)

    @classmethod
    def from_poly(cls, n: int, p: UniPoly) -> CycloElem:
        return cls(n, p.coeffs)

    def lift(self) -> UniPoly:
        return UniPoly(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def __repr__(self) -> str:
        return f"CycloElem({self.n}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return self.lift().to_str(f"z{self.n}")

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(Fraction(self._num[0], self._den))
        return hash((self.n, self._num, self._den))

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloElem):
            return (self.n == other.n and self._num == other._num
                    and self._den == other._den)
        if isinstance(other, _RationalABC):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def _coerce(self, other) -> CycloElem | None:
        if isinstance(other, CycloElem):
            if other.n != self.n:
                raise ValueError(
                    f"mixed cyclotomic fields: n={self.n} and n={other.n}")
            return other
        if isinstance(other, _RationalABC):
            return CycloElem.from_rational(self.n, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        da, db = self._den, o._den
        if da == db:
            num = [x + y for x, y in zip(self._num, o._num)]
            return CycloElem(self.n, _raw=(num, da))
        g = gcd(da, db)
        fa, fb = db // g, da // g
        num = [x * fa + y * fb for x, y in zip(self._num, o._num)]
        return CycloElem(self.n, _raw=(num, da * fa))

    __radd__ = __add__

    def __neg__(self) -> CycloElem:
        return CycloElem(self.n, _raw=([-x for x in self._num], self._den))

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
        if isinstance(other, _RationalABC):
            f = Fraction(other)
            return CycloElem(self.n, _raw=([x * f.numerator for x in self._num],
                                           self._den * f.denominator))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._num, o._num
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return CycloElem(self.n, _raw=(_reduce(prod, _phi_int(self.n)),
                                       self._den * o._den))

    __rmul__ = __mul__

    def inverse(self) -> CycloElem:
        if self.is_zero():
            raise ZeroDivisionError(f"inverse of zero in Q(zeta_{self.n})")
        if self.is_rational():
            return CycloElem.from_rational(self.n, 1 / Fraction(self._num[0], self._den))
        g, u, _ = ext_gcd(self.lift(), cyclotomic_poly(self.n))
        # Phi_n is irreducible, so a nonzero reduced element is coprime to it
        assert g.degree == 0
        return CycloElem.from_poly(self.n, u)

    def __truediv__(self, other):
        if isinstance(other, _RationalABC):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> CycloElem:
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        result = CycloElem.one(self.n)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def galois(self, a: int) -> CycloElem:
        """Image under the automorphism z -> z^a (``gcd(a, n) == 1``)."""
        if gcd(a, self.n) != 1:
            raise ValueError(f"{a} is not a unit modulo {self.n}")
        acc = CycloElem.zero(self.n)
        for k, c in enumerate(self.coeffs):
            if c:
                acc = acc + zeta_power(self.n, a * k) * c
        return acc


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num, den = [-x for x in num], -den
    g = den
    for x in num:
        if g == 1:
            break
        g = gcd(g, x)
    if g > 1:
        num = [x // g for x in num]
        den //= g
    return tuple(num), den


def _reduce(vec: list[int], phi: tuple[int, ...]) -> list[int]:
    """Reduce an integer vector modulo the monic integer polynomial phi."""
    d = len(phi) - 1
    v = list(vec)
    low = phi[:d]
    for k in range(len(v) - 1, d - 1, -1):
        c = v[k]
        if c:
            base = k - d
            for j, p in enumerate(low):
                if p:
                    v[base + j] -= c * p
    v = v[:d]
    return v + [0] * (d - len(v))


def zeta_power(n: int, k: int) -> CycloElem:
    """zeta_n ** (k mod n)."""
    if n < 1:
        raise ValueError("zeta_power needs n >= 1")
    k %= n
    phi = _phi_int(n)
    d = len(phi) - 1
    vec = [0] * k + [1]
    return CycloElem(n, _raw=(_reduce(vec, phi) if len(vec) > d else vec + [0] * (d - len(vec)), 1))


def cyclo_arith(a: CycloElem, b: CycloElem, op: str) -> CycloElem:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown cyclotomic operation {op!r}")


def cyclo_inverse(a: CycloElem) -> CycloElem:
    return a.inverse()


def as_rational(a) -> Fraction:
    """The rational value of ``a``; raises :class:`NonRational` otherwise."""
    if isinstance(a, _RationalABC):
        return Fraction(a)
    if not a.is_rational():
        raise NonRational(a)
    return Fraction(a._num[0], a._den)
