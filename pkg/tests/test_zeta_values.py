from fractions import Fraction as F
from math import gcd

import pytest

from qzeta.cyclotomic import zeta_power, as_rational
from qzeta.exact_core import UniPoly
from qzeta.zeta_values import (NoStabilization, NPoly, OutOfValidityRange,
                               Route, ValuationError, ZetaQuery, compute,
                               compute_value, fit_npoly, fit_samples, f_poly,
                               newton_interpolate, routes_for, route_valid)
from qzeta.zeta_values import genfun
from qzeta.zeta_values.brute import (tuple_sum, z_brute, z_star_brute,
                                     z_star_via_stirling, z_via_stirling)
from qzeta.zeta_values.closed import (z_root_closed_s1, z_root_closed_s2,
                                      z_root_general, z_root_m1_det,
                                      z_star_root_bell, z_star_root_rec,
                                      z_star_root_sum_rule)
from qzeta.zeta_values.genfun import BiPoly, alpha_power_product, z_star_root_genfun


def star_poly(n, m, s):
    # explicit stack over nondecreasing tuples, no shared code with brute.py
    z = zeta_power(n, 1)
    inv = [None] + [((1 - z ** k).inverse()) ** s for k in range(1, n)]
    total = 0
    stack = [(1, 0, 1)]
    while stack:
        start, depth, acc = stack.pop()
        if depth == m:
            total = acc + total
            continue
        for k in range(start, n):
            stack.append((k, depth + 1, acc * inv[k]))
    return as_rational(total)


class TestBrute:
    def test_worked_examples(self):
        assert z_star_brute(ZetaQuery(2, 3, 1)).value == F(1, 8)
        assert z_star_brute(ZetaQuery(3, 1, 2)).value == F(1, 3)
        assert z_star_brute(ZetaQuery(3, 1, 1, q=2)).value == F(-4, 3)
        assert z_brute(ZetaQuery(3, 1, 1, star=False)).value == 1
        assert z_brute(ZetaQuery(4, 3, 1, star=False)).value == F(1, 4)

    def test_empty_sum(self):
        for star in (True, False):
            qry = ZetaQuery(6, 0, 2, star=star)
            assert (z_star_brute(qry) if star else z_brute(qry)).value == 1

    def test_plain_vanishes_beyond_length(self):
        assert z_brute(ZetaQuery(4, 4, 1, star=False)).value == 0

    def test_tuple_sum_small(self):
        xs = [F(2), F(3)]
        # weak: 2*2 + 2*3 + 3*3; strict: 2*3
        assert tuple_sum(xs, 2, True, F(1)) == 19
        assert tuple_sum(xs, 2, False, F(1)) == 6

    def test_against_loop_oracle(self):
        for n in range(2, 8):
            for m in range(0, 4):
                for s in (1, 2):
                    assert z_star_brute(ZetaQuery(n, m, s)).value == star_poly(n, m, s)

    def test_galois_invariance(self):
        for n in range(2, 10):
            for a in range(1, n):
                if gcd(a, n) == 1:
                    qry = ZetaQuery(n, 2, 2)
                    assert z_star_brute(qry, galois=a).value == z_star_brute(qry).value


class TestStirlingBridge:
    @pytest.mark.parametrize("q", [F(2), F(3, 5), F(-1, 2)])
    def test_generic_q(self, q):
        for n in range(2, 8):
            for m in range(0, 4):
                for s in (1, 2, 3):
                    for star in (True, False):
                        qry = ZetaQuery(n, m, s, q=q, star=star)
                        brute = z_star_brute(qry) if star else z_brute(qry)
                        bridge = z_star_via_stirling(qry) if star else z_via_stirling(qry)
                        assert brute.value == bridge.value

    def test_examples(self):
        assert z_star_via_stirling(ZetaQuery(3, 1, 1, q=2)).value == F(-4, 3)
        assert z_via_stirling(ZetaQuery(5, 0, 3, star=False)).value == 1

    def test_at_roots_of_unity(self):
        for n in range(2, 9):
            for m in range(0, 4):
                qry = ZetaQuery(n, m, 2)
                assert z_star_via_stirling(qry).value == z_star_brute(qry).value


class TestClosedForms:
    def test_s1(self):
        assert z_root_closed_s1(5, 2) == 2
        assert z_root_closed_s1(3, 1) == 1
        assert z_root_closed_s1(9, 0) == 1

    def test_s2(self):
        assert z_root_closed_s2(5, 1) == 0
        assert z_root_closed_s2(7, 1) == -1

    def test_s2_variants_agree(self):
        for n in range(2, 41):
            for m in range(0, 7):
                assert (z_root_closed_s2(n, m, "binomial")
                        == z_root_closed_s2(n, m, "r_stirling"))

    def test_m1_det(self):
        for n in range(2, 12):
            assert z_root_m1_det(n, 1) == F(n - 1, 2)
            assert z_root_m1_det(n, 3) == -F((n - 1) * (n - 3), 8)
        assert z_root_m1_det(5, 2) == 0

    def test_general(self):
        for n in range(2, 9):
            assert z_root_general(n, 1, 3) == z_root_m1_det(n, 3)
            assert z_root_general(n, 3, 2) == z_brute(ZetaQuery(n, 3, 2, star=False)).value


class TestStarRoutes:
    def test_bell_m2(self):
        for n in range(2, 15):
            assert z_star_root_bell(n, 2, 1) == F(n * n - 1, 12)
            assert z_star_root_bell(n, 2, 3) == -F((n + 1) * (n - 1)
                                                   * (n ** 4 - 650 * n ** 2 + 3780 * n - 5291),
                                                   12 * 5040)
        assert z_star_root_bell(7, 0, 2) == 1

    def test_sum_rule(self):
        assert z_star_root_sum_rule(5, 2, 1) == 2
        assert z_star_root_sum_rule(3, 2, 2) == 0
        with pytest.raises(OutOfValidityRange):
            compute(ZetaQuery(5, 3, 1), Route.SUM_RULE)

    def test_recurrences_inside_validity(self):
        for s in (1, 2, 3):
            for n in range(2, 16):
                for m in range(0, 5):
                    qry = ZetaQuery(n, m, s)
                    if route_valid(qry, Route.REC) is None:
                        assert z_star_root_rec(n, m, s) == z_star_brute(qry).value

    def test_recurrence_refuses_outside(self):
        bad = [(n, m, s) for s in (2, 3) for n in range(2, 8) for m in range(1, 6)
               if route_valid(ZetaQuery(n, m, s), Route.REC) is not None]
        assert bad
        n, m, s = bad[0]
        with pytest.raises(OutOfValidityRange):
            compute(ZetaQuery(n, m, s), Route.REC)


class TestGenfun:
    def test_s1_values(self):
        assert z_star_root_genfun(4, 3, 1) == [1, F(3, 2), F(5, 4), F(5, 8)]

    def test_s2_value(self):
        assert z_star_root_genfun(5, 1, 2)[1] == 0

    def test_beyond_tables(self):
        for s in (4, 5):
            for n in range(2, 7):
                vals = z_star_root_genfun(n, 3, s)
                for m in range(4):
                    assert vals[m] == z_star_brute(ZetaQuery(n, m, s)).value

    def test_valuation(self):
        for s in range(1, 6):
            for n in range(2, 12):
                d = alpha_power_product(n, s, 4)
                assert d[0] == 0
                assert d[1] == -F(n) ** s

    def test_valuation_error(self, monkeypatch):
        def broken(n, s, order):
            return alpha_power_product(n, s, order) * -1
        monkeypatch.setattr(genfun, "alpha_power_product", broken)
        with pytest.raises(ValuationError):
            genfun.z_star_root_genfun(5, 2, 1)


class TestFPoly:
    X, Y = BiPoly.X(), BiPoly.Y()

    def test_listed(self):
        X, Y = self.X, self.Y
        one = BiPoly.const(1)
        assert f_poly(1, 1) == one - Y + X * Y
        assert f_poly(2, 1) == (one - Y) ** 2 - X * Y ** 2
        assert f_poly(3, 2) == (one - Y) ** 3 - 3 * X * Y ** 2 - (X ** 2 - 2 * X) * Y ** 3
        for s in (1, 2, 3):
            assert f_poly(s, s) == one - Y + X * Y
        assert f_poly(2, 0) == one - Y

    def test_first_compound_closed_form(self):
        X, Y = self.X, self.Y
        for s in range(1, 5):
            assert f_poly(s, 1) == (1 - Y) ** s - (-1) ** s * X * Y ** s

    def test_str_and_grid(self):
        assert str(f_poly(1, 1)) == "1 - Y + X*Y"
        assert f_poly(1, 1).grid == [[1, -1], [0, 1]]

    def test_range(self):
        with pytest.raises(ValueError):
            f_poly(2, 3)


class TestDispatch:
    def test_routes_for(self):
        assert Route.GENFUN in routes_for(ZetaQuery(5, 2, 1))
        assert Route.GENERAL in routes_for(ZetaQuery(5, 2, 1, star=False))
        assert routes_for(ZetaQuery(5, 2, 1, q=2)) == (Route.BRUTE, Route.STIRLING)

    def test_invalid_route(self):
        with pytest.raises(OutOfValidityRange):
            compute(ZetaQuery(5, 2, 1, q=2), Route.GENFUN)
        with pytest.raises(OutOfValidityRange):
            compute(ZetaQuery(5, 2, 1), Route.CLOSED_S1)

    def test_query_validation(self):
        with pytest.raises(ValueError):
            ZetaQuery(1, 0, 1)
        with pytest.raises(ValueError):
            ZetaQuery(3, -1, 1)

    def test_m1_coincidence(self):
        for n in range(2, 12):
            for s in (1, 2, 3, 4):
                assert compute_value(n, 1, s, True, "brute") == compute_value(n, 1, s, False, "brute")

    def test_all_routes_agree_small_grid(self):
        for n in range(2, 9):
            for m in range(0, 4):
                for s in (1, 2, 3):
                    for star in (True, False):
                        qry = ZetaQuery(n, m, s, star=star)
                        values = {compute(qry, r).value for r in routes_for(qry)
                                  if route_valid(qry, r) is None}
                        assert len(values) == 1


class TestFit:
    def test_newton_interpolate(self):
        p = newton_interpolate([0, 1, 2], [1, 2, 5])
        assert p == UniPoly([1, 0, 1])

    def test_fit_samples_detects_degree(self):
        fit = fit_samples(lambda n: F(n ** 3 - 2 * n, 7))
        assert fit.poly == UniPoly([0, F(-2, 7), 0, F(1, 7)])
        for n, y in fit.samples:
            assert fit(n) == y

    def test_no_stabilization(self):
        with pytest.raises(NoStabilization):
            fit_samples(lambda n: F(2) ** n, max_degree=6)

    def test_simple_fits(self):
        assert fit_npoly(1, 1).poly == UniPoly([F(-1, 2), F(1, 2)])
        assert fit_npoly(1, 3).poly == UniPoly([F(-3, 8), F(1, 2), F(-1, 8)])
        assert fit_npoly(2, 1, route="bell").poly == UniPoly([F(-1, 12), 0, F(1, 12)])

    def test_from_factors(self):
        p = NPoly.from_factors(F(1, 12), [[1, 1], [-1, 1]])
        assert p.poly == UniPoly([F(-1, 12), 0, F(1, 12)])
        assert str(p) == "1/12*n^2 - 1/12"
