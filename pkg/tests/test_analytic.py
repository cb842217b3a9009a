from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from blattice.algebra import IntervalValue
from blattice.analytic import (Majorant, SeriesError, SeriesResult, benoumhani_dowling,
                               dobinski, n2b_series, n2b_series_by, n2d_series, n2d_series_by,
                               nb_pi_series, nbr_series, ndr_series, nn_series,
                               pittel_nar_series, sum_series_1d)
from blattice.enumeration import all_shapes
from blattice.exact import (bell_number, dowling_number, n2b_exact, n2b_exact_by, n2d_exact,
                            n2d_exact_by, n_no_zero, na_r_exact, nb_pi, nd_r_exact)
from blattice.oracle import oracle_count_tuples

FIXED_EPS = Fraction(1, 10 ** 40)


def check(res: SeriesResult, want: int):
    assert res.value.width < Fraction(1, 2)
    assert res.value.contains(want)
    assert res.recovered_integer == want


@pytest.mark.parametrize("n", range(11))
def test_one_dimensional_series(n):
    check(dobinski(n), bell_number(n))
    check(benoumhani_dowling(n), dowling_number(n))
    check(nn_series(n), n_no_zero(n))


def test_examples():
    assert benoumhani_dowling(5).recovered_integer == 648
    assert nn_series(4).recovered_integer == 49
    assert nbr_series(2, 3).recovered_integer == 187
    assert [nbr_series(1, r).recovered_integer for r in range(1, 6)] == [1, 3, 7, 15, 31]


@pytest.mark.parametrize("n", range(6))
def test_per_shape_series(n):
    for s in all_shapes(n):
        check(nb_pi_series(s), nb_pi(s))


@pytest.mark.parametrize("n", range(5))
def test_split_pair_series(n):
    for i0 in range(n + 1):
        for k in range(n - i0 + 1):
            check(n2b_series_by(i0, k, n), n2b_exact_by(i0, k, n))
    for k in range(n + 1):
        check(n2d_series_by(k, n), n2d_exact_by(k, n))


@pytest.mark.parametrize("n", range(6))
def test_pair_series(n):
    check(n2b_series(n), n2b_exact(n))
    check(n2d_series(n), n2d_exact(n))


@pytest.mark.parametrize("n", range(5))
@pytest.mark.parametrize("r", (1, 2, 3))
def test_r_fold_series(n, r):
    check(ndr_series(n, r), nd_r_exact(n, r))
    check(pittel_nar_series(n, r), na_r_exact(n, r))
    if n <= 3:
        check(nbr_series(n, r), oracle_count_tuples(n, r, "B"))


@pytest.mark.parametrize("fn, args, cuts", [
    (benoumhani_dowling, (4,), (10, 15, 20)),
    (nn_series, (3,), (8, 12, 16)),
    (n2b_series_by, (1, 1, 3), (8, 12, 16)),
    (nbr_series, (2, 2), (8, 12, 16)),
    (ndr_series, (2, 3), (6, 9, 12)),
    (pittel_nar_series, (3, 2), (10, 14, 18)),
])
def test_width_shrinks_with_truncation(fn, args, cuts):
    widths = [fn(*args, truncation=c, exp_eps=FIXED_EPS).value.width for c in cuts]
    assert widths[0] > widths[1] > widths[2]


def test_truncation_too_early_raises():
    with pytest.raises(SeriesError):
        dobinski(6, truncation=2)
    with pytest.raises(SeriesError):
        nbr_series(2, 2, truncation=0)


def test_max_terms_exhausted():
    with pytest.raises(SeriesError):
        nbr_series(3, 3, max_terms=8)
    res = dobinski(10, max_terms=12)
    assert not res.resolved and "UNRESOLVED" in str(res)
    assert res.value.contains(bell_number(10))


def test_target_width_is_met():
    res = benoumhani_dowling(6, target_width=Fraction(1, 10 ** 9))
    assert res.value.width < Fraction(1, 10 ** 9)
    with pytest.raises(ValueError):
        dobinski(2, target_width=0)


def test_bad_arguments():
    for call in (lambda: nbr_series(2, 0), lambda: ndr_series(-1, 2),
                 lambda: n2b_series_by(3, 1, 2), lambda: n2d_series_by(-1, 2)):
        with pytest.raises(ValueError):
            call()


def test_majorant():
    m = Majorant(Fraction(1), ((1, -2), (2, 1)), Fraction(1, 2))
    assert m.positive_from() == 3
    assert m.tail(2) is None
    assert Majorant(Fraction(1), ((0, 0),), Fraction(1)).positive_from() is None
    assert Majorant(Fraction(0), (), Fraction(1)).tail(0) == (0, 0)


@given(st.integers(0, 6), st.fractions(min_value=Fraction(1, 4), max_value=3, max_denominator=4))
@settings(max_examples=25, deadline=None)
def test_series_enclosure_contains_exact_value(n, x):
    # e^{-x} Σ k^n x^k/k! is the Touchard polynomial Σ_k S(n,k) x^k
    from blattice.exact import stirling2
    import math
    want = sum(stirling2(n, k) * x ** k for k in range(n + 1))
    res = sum_series_1d(lambda k: Fraction(k ** n) * x ** k / math.factorial(k),
                        Majorant(Fraction(1), ((1, 0),) * n, x), x,
                        target_width=Fraction(1, 10 ** 6))
    assert res.value.contains(want) and res.value.width < Fraction(1, 10 ** 6)
