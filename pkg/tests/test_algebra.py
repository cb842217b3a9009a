import math
from fractions import Fraction
from itertools import product

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from blattice.algebra import (AlgebraError, BoundedPoly, IntervalValue, RationalSeries,
                              exp_neg, exp_neg_half_pow, exp_series, log1p_series, poly_coeff,
                              poly_mul, poly_pow, poly_sub_const, product_of_powers,
                              series_compose, series_mul, series_pow)


def untruncated_product(a: dict, b: dict) -> dict:
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            idx = tuple(p + q for p, q in zip(i, j))
            out[idx] = out.get(idx, 0) + x * y
    return out


def poly_strategy():
    caps = st.lists(st.integers(0, 3), min_size=1, max_size=2).map(tuple)

    def with_coeffs(c):
        idx = st.tuples(*[st.integers(0, 4) for _ in c])
        return st.tuples(st.just(c), st.dictionaries(idx, st.integers(-5, 5), max_size=6),
                         st.dictionaries(idx, st.integers(-5, 5), max_size=6))
    return caps.flatmap(with_coeffs)


# -- BoundedPoly --------------------------------------------------------------

@given(poly_strategy())
def test_truncated_product_matches_untruncated(data):
    caps, a, b = data
    fits = lambda idx: all(e <= c for e, c in zip(idx, caps))
    full = untruncated_product(a, b)
    prod = BoundedPoly(caps, a) * BoundedPoly(caps, b)
    for idx in product(*[range(c + 1) for c in caps]):
        # truncating the inputs first never changes a coefficient inside the caps
        want = sum(x * y for i, x in a.items() for j, y in b.items()
                   if fits(i) and fits(j) and tuple(p + q for p, q in zip(i, j)) == idx)
        assert prod.coeff(idx) == want
        if all(fits(i) for i in a) and all(fits(j) for j in b):
            assert prod.coeff(idx) == full.get(idx, 0)


@given(st.integers(0, 12), st.integers(0, 15))
def test_binomial_coefficients(m, cap):
    p = BoundedPoly.linear_factor((cap,), 0) ** m
    for j in range(cap + 1):
        assert p.coeff((j,)) == math.comb(m, j)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=3), st.integers(0, 6))
def test_product_of_powers(caps, e):
    p = product_of_powers(caps, e)
    for idx in product(*[range(c + 1) for c in caps]):
        assert p.coeff(idx) == math.prod(math.comb(e, i) for i in idx)


@given(poly_strategy(), st.integers(0, 4))
@settings(max_examples=40)
def test_power_is_repeated_product(data, m):
    caps, a, _ = data
    p = BoundedPoly(caps, a)
    q = BoundedPoly.constant(caps, 1)
    for _ in range(m):
        q = q * p
    assert p ** m == q == poly_pow(p, m)


def test_poly_helpers_and_errors():
    caps = (2, 1)
    x = BoundedPoly.linear_factor(caps, 0, 0, 1)
    y = BoundedPoly.linear_factor(caps, 1, 0, 1)
    p = poly_sub_const(poly_mul(x + 1, y + 1), 1)
    assert poly_coeff(p, (0, 0)) == 0 and poly_coeff(p, (1, 1)) == 1
    assert (x * x * x).coeffs == {}
    assert 2 * x - x == x
    with pytest.raises(AlgebraError):
        p.coeff((3, 0))
    with pytest.raises(AlgebraError):
        x * BoundedPoly.constant((2,))
    with pytest.raises(AlgebraError):
        x ** -1
    with pytest.raises(AlgebraError):
        BoundedPoly((-1,))
    assert BoundedPoly.univariate(2, [1, 2, 3, 4]).coeffs == {(0,): 1, (1,): 2, (2,): 3}


# -- series ---------------------------------------------------------------

series_st = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7),
                     min_size=1, max_size=6).map(lambda c: RationalSeries(tuple(c)))


@given(series_st, series_st)
def test_compose_matches_direct_substitution(f, g):
    N = 5
    g = RationalSeries((0,) + g.coeffs[1:]) if g.order else RationalSeries((0,))
    direct = RationalSeries((Fraction(0),)).truncate(N)
    for k, fk in enumerate(f.coeffs):
        term = series_pow(g, k, N)
        direct = RationalSeries(tuple(d + fk * t for d, t in zip(direct.coeffs, term.coeffs)))
    assert series_compose(f, g, N) == direct


@given(series_st, series_st)
def test_series_mul_commutes(a, b):
    assert series_mul(a, b, 6) == series_mul(b, a, 6)


def test_exp_of_log1p_is_identity():
    N = 8
    res = series_compose(exp_series(N), log1p_series(N), N)
    assert res.coeffs == (1, 1) + (0,) * (N - 1)


def test_egf_round_trip_and_errors():
    s = RationalSeries.from_egf([1, 1, 2, 5, 15])
    assert s.egf_values() == [1, 1, 2, 5, 15]
    assert s[10] == 0 and s.truncate(2).order == 2 and s.truncate(7).order == 7
    with pytest.raises(AlgebraError):
        series_compose(s, s, 3)
    with pytest.raises(AlgebraError):
        RationalSeries(())


# -- intervals and exp --------------------------------------------------------

def test_interval_basics():
    iv = IntervalValue(Fraction(1, 3), Fraction(5, 2))
    assert list(iv.integers()) == [1, 2] and iv.unique_integer() is None
    assert IntervalValue(Fraction(9, 10), Fraction(11, 10)).unique_integer() == 1
    assert IntervalValue(Fraction(1, 10), Fraction(9, 10)).unique_integer() is None
    assert (iv * -1).lo == Fraction(-5, 2)
    assert (iv + iv).width == 2 * iv.width
    assert iv.intersects(IntervalValue(2, 3)) and not iv.intersects(IntervalValue(3, 4))
    with pytest.raises(AlgebraError):
        IntervalValue(2, 1)


@given(st.fractions(min_value=0, max_value=12, max_denominator=50),
       st.sampled_from([Fraction(1, 10 ** d) for d in (2, 6, 12, 20)]))
@settings(max_examples=60)
def test_exp_neg_contains_true_value(x, eps):
    digits = 4 * max(20, -int(math.log10(eps)))
    with mpmath.workdps(digits):
        true = mpmath.exp(-mpmath.mpf(x.numerator) / x.denominator)
        iv = exp_neg(x, eps)
        assert mpmath.mpf(iv.lo.numerator) / iv.lo.denominator <= true
        assert true <= mpmath.mpf(iv.hi.numerator) / iv.hi.denominator
    assert iv.width < eps and iv.lo > 0


def test_exp_neg_edge_cases():
    assert exp_neg(Fraction(0), Fraction(1, 10)) == IntervalValue(1, 1)
    with pytest.raises(AlgebraError):
        exp_neg(Fraction(-1), Fraction(1, 10))
    with pytest.raises(AlgebraError):
        exp_neg_half_pow(0, Fraction(1, 10))
    assert exp_neg_half_pow(2, Fraction(1, 10 ** 9)).contains(Fraction(367879441171, 10 ** 12))
