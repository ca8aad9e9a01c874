import random
from fractions import Fraction as F
from itertools import combinations, combinations_with_replacement
from math import prod

import pytest
from hypothesis import given, strategies as st

from qzeta.symfun import (SeqView, bell_complete, e_from_powersums, gotrudi,
                          h_from_powersums, hessenberg_det,
                          partitions_by_multiplicity)


def power_sums(multiset, k):
    return [sum(F(x) ** j for x in multiset) for j in range(1, k + 1)]


def h_direct(multiset, k):
    return sum((prod(c, start=F(1)) for c in combinations_with_replacement(multiset, k)), F(0))


def e_direct(multiset, k):
    return sum((prod(c, start=F(1)) for c in combinations(multiset, k)), F(0))


def random_seq(rng, length=8):
    return [F(rng.randint(-30, 30), rng.randint(1, 9)) for _ in range(length)]


class TestBell:
    def test_low_orders(self):
        x1, x2, x3 = F(2), F(-3, 7), F(5, 4)
        assert bell_complete([], 0) == 1
        assert bell_complete([x1], 1) == x1
        assert bell_complete([x1, x2], 2) == x1 ** 2 + x2
        assert bell_complete([x1, x2, x3], 3) == x1 ** 3 + 3 * x1 * x2 + x3

    def test_fourth_order(self):
        # Y_4 = x1^4 + 6 x1^2 x2 + 4 x1 x3 + 3 x2^2 + x4
        x = [F(1, 2), F(3), F(-2, 5), F(7)]
        x1, x2, x3, x4 = x
        assert bell_complete(x, 4) == x1 ** 4 + 6 * x1 ** 2 * x2 + 4 * x1 * x3 + 3 * x2 ** 2 + x4

    def test_routes_agree(self):
        rng = random.Random(7)
        for _ in range(40):
            xs = random_seq(rng)
            for m in range(9):
                assert (bell_complete(xs, m, "partition")
                        == bell_complete(xs, m, "determinant"))

    def test_short_input(self):
        with pytest.raises(ValueError):
            bell_complete([1], 2)

    def test_partition_count(self):
        # p(1..8)
        counts = [sum(1 for _ in partitions_by_multiplicity(m)) for m in range(1, 9)]
        assert counts == [1, 2, 3, 5, 7, 11, 15, 22]


class TestNewton:
    def test_examples(self):
        g = power_sums([1, 2], 3)
        assert g[:2] == [3, 5]
        assert h_from_powersums(g, 2) == 7
        assert h_from_powersums(g, 0) == 1
        assert h_from_powersums(g, 1) == g[0]
        assert e_from_powersums(g, 2) == 2

    def test_low_degree_formulas(self):
        g = [F(3, 2), F(-1, 3), F(5)]
        g1, g2, g3 = g
        assert e_from_powersums(g, 2) == (g1 ** 2 - g2) / 2
        assert e_from_powersums(g, 3) == (g1 ** 3 - 3 * g1 * g2 + 2 * g3) / 6

    @given(st.lists(st.fractions(-5, 5, max_denominator=6), min_size=1, max_size=5),
           st.integers(0, 5))
    def test_against_enumeration(self, multiset, k):
        g = power_sums(multiset, max(k, 1))
        assert h_from_powersums(g, k) == h_direct(multiset, k)
        assert e_from_powersums(g, k) == e_direct(multiset, k)

    def test_duality(self):
        rng = random.Random(3)
        g = random_seq(rng)
        for big_k in range(1, 9):
            total = sum(((-1) ** j * e_from_powersums(g, j) * h_from_powersums(g, big_k - j)
                         for j in range(big_k + 1)), F(0))
            assert total == 0


class TestHessenberg:
    def test_one_by_one(self):
        assert hessenberg_det([F(4, 3)], []) == F(4, 3)

    def test_two_by_two(self):
        a1, a2 = F(3), F(-2, 5)
        assert hessenberg_det([a1, a2], [-1]) / 2 == (a1 ** 2 + a2) / 2

    def test_three_by_three_against_expansion(self):
        # [[a1, -1, 0], [a2, a1, -2], [a3, a2, a1]]
        a1, a2, a3 = F(2), F(1, 3), F(-4)
        expected = a1 * (a1 * a1 + 2 * a2) + (a2 * a1 + 2 * a3)
        assert hessenberg_det([a1, a2, a3], [-1, -2]) == expected


class TestGotrudi:
    def test_examples(self):
        a = power_sums([1, 2], 3)
        assert [gotrudi("iv", a, k) for k in (1, 2, 3)] == [3, 7, 15]
        assert gotrudi("v", [3, 7, 15], 2) == 5
        assert gotrudi("iii", [F(3), F(7)], 2) == 2 * 7 - 3 ** 2

    def test_first_terms_coincide(self):
        seq = [F(-7, 3)]
        for form in ("i", "ii", "iii", "iv", "v"):
            assert gotrudi(form, seq, 1) == seq[0]

    def test_role_checks(self):
        with pytest.raises(ValueError):
            gotrudi("iii", SeqView("a", [1, 2]), 2)
        with pytest.raises(ValueError):
            gotrudi("vi", [1], 1)
        with pytest.raises(ValueError):
            SeqView("c", [])

    @given(st.lists(st.fractions(-20, 20, max_denominator=9), min_size=6, max_size=6))
    def test_round_trip(self, a):
        bs = [gotrudi("iv", a, k) for k in range(1, 7)]
        assert [gotrudi("i", a, k) for k in range(1, 7)] == bs
        assert [gotrudi("ii", a, k) for k in range(1, 7)] == bs
        assert [gotrudi("iii", bs, k) for k in range(1, 7)] == a
        assert [gotrudi("v", bs, k) for k in range(1, 7)] == a
