import cmath
from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given, strategies as st

from qzeta.cyclotomic import (CycloElem, NonRational, as_rational, cyclo_arith,
                              cyclo_inverse, cyclotomic_poly, totient, zeta_power)
from qzeta.exact_core import UniPoly


def numeric(elem: CycloElem) -> complex:
    """Embed via z -> exp(2 pi i / n); only used as an independent oracle."""
    z = cmath.exp(2j * cmath.pi / elem.n)
    return sum(float(c) * z ** k for k, c in enumerate(elem.coeffs))


@pytest.mark.parametrize("n, coeffs", [
    (1, [-1, 1]),
    (2, [1, 1]),
    (6, [1, -1, 1]),
    (12, [1, 0, -1, 0, 1]),
])
def test_small_cyclotomic_polys(n, coeffs):
    assert cyclotomic_poly(n) == UniPoly(coeffs)


def test_divisor_product_is_xn_minus_1():
    for n in range(1, 61):
        prod = UniPoly([1])
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic_poly(d)
        assert prod == UniPoly.monomial(n) - 1
        phi = cyclotomic_poly(n)
        assert phi.degree == totient(n)
        assert phi[0] in (-1, 1)
        assert all(c.denominator == 1 for c in phi.coeffs)


def test_zeta_power_basics():
    assert zeta_power(7, 0) == 1
    assert zeta_power(4, 1).coeffs == (0, 1)
    assert zeta_power(3, 2).coeffs == (-1, -1)
    assert zeta_power(5, 7) == zeta_power(5, 2)


def test_roots_of_unity_identities():
    for n in range(1, 61):
        z = zeta_power(n, 1)
        assert z ** n == 1
        if n >= 2:
            acc = CycloElem.zero(n)
            for k in range(n):
                acc = acc + zeta_power(n, k)
            assert acc.is_zero()


def test_norm_of_one_minus_zeta():
    for n in range(2, 41):
        prod = CycloElem.one(n)
        for j in range(1, n):
            prod = prod * (1 - zeta_power(n, j))
        assert as_rational(prod) == n


def test_field_examples():
    assert as_rational(cyclo_inverse(1 - zeta_power(2, 1))) == F(1, 2)
    z3 = zeta_power(3, 1)
    assert cyclo_arith(1 - z3, 1 - z3 * z3, "mul") == 3
    total = (1 - z3).inverse() + (1 - z3 * z3).inverse()
    assert as_rational(total) == 1


def test_non_rational():
    with pytest.raises(NonRational) as info:
        as_rational(zeta_power(5, 1))
    assert info.value.elem == zeta_power(5, 1)
    assert as_rational(CycloElem.one(9)) == 1


def test_errors():
    with pytest.raises(ZeroDivisionError):
        CycloElem.zero(5).inverse()
    with pytest.raises(ValueError):
        zeta_power(5, 1) + zeta_power(7, 1)


elements = st.integers(2, 30).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.fractions(-9, 9, max_denominator=7), min_size=totient(n), max_size=totient(n))))


@given(elements)
def test_inverse_property(data):
    n, coeffs = data
    a = CycloElem(n, coeffs)
    if a.is_zero():
        return
    assert a * cyclo_inverse(a) == 1
    assert abs(numeric(a) * numeric(a.inverse()) - 1) < 1e-6


@given(elements, elements)
def test_multiplication_matches_complex_embedding(da, db):
    n, ca = da
    b = CycloElem(n, db[1][:totient(n)] + [0] * max(0, totient(n) - len(db[1])))
    a = CycloElem(n, ca)
    assert abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-6


def test_galois_action_is_a_field_automorphism():
    for n in (5, 8, 12):
        a = CycloElem(n, [F(k + 1, 3) for k in range(totient(n))])
        b = 1 - zeta_power(n, 1)
        for g in range(1, n):
            if gcd(g, n) == 1:
                assert (a * b).galois(g) == a.galois(g) * b.galois(g)
                assert zeta_power(n, 1).galois(g) == zeta_power(n, g)
