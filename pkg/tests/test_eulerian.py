from fractions import Fraction

import pytest

from linchar.ehrhart import series_coeffs
from linchar.errors import UnsupportedRank
from linchar.eulerian import (
    asc_oracle,
    classical_eulerian,
    generalized_eulerian,
    truncate_half,
)
from linchar.ratpoly import RatPoly
from linchar.rootdata import ALL_TABLE_IDS, RootSystemId, lookup


def rid(text):
    return RootSystemId.parse(text)


class TestClassicalEulerian:
    def test_small_ranks(self):
        assert classical_eulerian(1) == RatPoly((0, 1))
        assert classical_eulerian(2) == RatPoly((0, 1, 1))
        assert classical_eulerian(3) == RatPoly((0, 1, 4, 1))

    def test_rank_six(self):
        assert classical_eulerian(6) == RatPoly((0, 1, 57, 302, 302, 57, 1))

    def test_coefficient_sum_is_factorial(self):
        for l in range(1, 9):
            assert classical_eulerian(l).evaluate(1) == Fraction(
                lookup(RootSystemId("A", l)).weyl_order, l + 1
            )


class TestGeneralizedEulerian:
    def test_g2(self):
        assert generalized_eulerian(rid("G2")) == RatPoly((0, 1, 3, 4, 3, 1))

    def test_e6(self):
        assert generalized_eulerian(rid("E6")) == RatPoly(
            (0, 1, 61, 537, 1916, 3782, 4686, 3782, 1916, 537, 61, 1)
        )

    def test_type_a_reduces_to_classical(self):
        for l in (1, 3, 5):
            assert generalized_eulerian(RootSystemId("A", l)) == classical_eulerian(l)

    @pytest.mark.parametrize("ident", ALL_TABLE_IDS, ids=str)
    def test_structure(self, ident):
        data = lookup(ident)
        R = generalized_eulerian(ident)
        assert R.degree == data.coxeter_number - 1
        assert R.coeff(0) == 0 and R.coeff(1) == 1
        assert all(c.denominator == 1 for c in R.coeffs)
        assert R.evaluate(1) == Fraction(data.weyl_order, data.index_of_connection)

    @pytest.mark.parametrize("ident", ALL_TABLE_IDS, ids=str)
    def test_duality(self, ident):
        h = lookup(ident).coxeter_number
        R = generalized_eulerian(ident)
        # x^h R(1/x) reverses the coefficients of a degree-(h-1) polynomial
        # into indices 1..h; with R(0)=0 this is exactly coefficient reversal.
        reversed_R = RatPoly((0,) + tuple(reversed(R.coeffs[1:])))
        assert reversed_R == R

    @pytest.mark.parametrize("ident", ALL_TABLE_IDS, ids=str)
    def test_series_identity_with_ehrhart(self, ident):
        # R(z) * Ehr(z) = sum k^l z^k, checked on the first 50 coefficients
        N = 50
        data = lookup(ident)
        R = generalized_eulerian(ident)
        ehr = series_coeffs(ident, N)
        for k in range(N):
            conv = sum(int(R.coeff(j)) * ehr[k - j] for j in range(min(k, R.degree) + 1))
            assert conv == k**data.rank


class TestTruncateHalf:
    def test_g2(self):
        assert truncate_half(generalized_eulerian(rid("G2")), 6) == RatPoly((0, 1, 3, 2))

    def test_e6(self):
        assert truncate_half(generalized_eulerian(rid("E6")), 12) == RatPoly(
            (0, 1, 61, 537, 1916, 3782, 2343)
        )

    def test_odd_coxeter_number(self):
        assert truncate_half(RatPoly((0, 1, 1)), 3) == RatPoly((0, 1))

    def test_degree_mismatch_rejected(self):
        with pytest.raises(ValueError):
            truncate_half(RatPoly((0, 1, 1)), 6)

    @pytest.mark.parametrize("ident", ALL_TABLE_IDS, ids=str)
    def test_reassembly(self, ident):
        # R(x) = R'(x) + x^h R'(1/x)
        h = lookup(ident).coxeter_number
        R = generalized_eulerian(ident)
        half = truncate_half(R, h)
        mirrored = [Fraction(0)] * (h + 1)
        for i, c in enumerate(half.coeffs):
            if c:
                mirrored[h - i] = c
        assert half + RatPoly(mirrored) == R


class TestAscOracle:
    @pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2"])
    def test_matches_product_formula(self, name):
        assert asc_oracle(rid(name)) == generalized_eulerian(rid(name))

    @pytest.mark.parametrize("name", ["A3", "B3", "C3", "D3"])
    def test_rank_three_types(self, name):
        assert asc_oracle(rid(name)) == generalized_eulerian(rid(name))

    def test_rank_cap(self):
        with pytest.raises(UnsupportedRank):
            asc_oracle(rid("B4"))
