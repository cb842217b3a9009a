"""Finite-order checks of the EGF identities and two analytic identities.

EGF identities are compared with exact rational equality; the analytic ones
by interval containment.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import IntervalValue, RationalSeries, exp_neg_half_pow, series_compose
from .analytic import Majorant, SeriesError, ndr_series, pittel_nar_series, sum_series_1d
from .config import get_settings
from .exact import (bell_number, double_factorial_even, n_no_zero, na_r_exact, nd_r_exact,
                    stirling2)


@dataclass
class CheckReport:
    name: str
    passed: bool
    details: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.passed

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}"


def _compare_series(name: str, lhs: RationalSeries, rhs: RationalSeries) -> CheckReport:
    bad = [f"x^{i}: {a} != {b}" for i, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)) if a != b]
    return CheckReport(name, not bad, bad)


def _order(N: int | None) -> int:
    return get_settings().canfield_order if N is None else N


def check_canfield_a(r: int, N: int | None = None, counts: Sequence[int] | None = None) -> CheckReport:
    """``M_r(e^x - 1) = Σ B_n^r x^n/n!`` to order ``N``.

    ``counts`` replaces the values ``N_{n,r}`` (used for mutation tests).
    """
    N = _order(N)
    counts = list(counts) if counts is not None else [na_r_exact(n, r) for n in range(N + 1)]
    m = RationalSeries.from_egf(counts[:N + 1])
    inner = RationalSeries((Fraction(0),) + tuple(Fraction(1, math.factorial(i)) for i in range(1, N + 1)))
    lhs = series_compose(m, inner, N)
    rhs = RationalSeries.from_egf([bell_number(n) ** r for n in range(N + 1)])
    return _compare_series(f"canfield_a r={r} N={N}", lhs, rhs)


def check_canfield_d(r: int, N: int | None = None, counts: Sequence[int] | None = None) -> CheckReport:
    """``M_r^D((e^{2x} - 1)/2) = Σ N_n^r x^n/n!`` to order ``N``."""
    N = _order(N)
    counts = list(counts) if counts is not None else [nd_r_exact(n, r) for n in range(N + 1)]
    m = RationalSeries.from_egf(counts[:N + 1])
    inner = RationalSeries((Fraction(0),) + tuple(Fraction(2 ** (i - 1), math.factorial(i))
                                                 for i in range(1, N + 1)))
    lhs = series_compose(m, inner, N)
    rhs = RationalSeries.from_egf([n_no_zero(n) ** r for n in range(N + 1)])
    return _compare_series(f"canfield_d r={r} N={N}", lhs, rhs)


def check_wilf_consistency(N: int, rs: Sequence[int] = (2, 3)) -> CheckReport:
    """Stirling-form counts against the recovered integers of the r-fold series."""
    details = []
    for r in rs:
        for n in range(N + 1):
            for kind, exact, series in (("A", na_r_exact, pittel_nar_series),
                                        ("D", nd_r_exact, ndr_series)):
                want = exact(n, r)
                got = series(n, r).recovered_integer
                if got != want:
                    details.append(f"{kind} n={n} r={r}: exact {want}, series {got}")
    return CheckReport(f"wilf_consistency N={N}", not details, details)


def half_e_partial_sum(l: int, K: int) -> IntervalValue:
    """Enclosure of ``Σ_k C(k,l)(-1)^{k-l}/(2k)!!`` from the terms ``k ≤ K``.

    From ``k = l`` on the term magnitudes decrease, so the limit lies between
    consecutive partial sums.
    """
    if K < l:
        raise ValueError("need K >= l")
    s = Fraction(0)
    for k in range(l, K + 1):
        s += Fraction(math.comb(k, l) * (-1) ** (k - l), double_factorial_even(2 * k))
    nxt = s + Fraction(math.comb(K + 1, l) * (-1) ** (K + 1 - l), double_factorial_even(2 * K + 2))
    return IntervalValue(min(s, nxt), max(s, nxt))


def check_half_e_identity(l: int, eps: Fraction | None = None) -> CheckReport:
    """``Σ_k C(k,l)(-1)^{k-l}/(2k)!! = e^{-1/2}/(2l)!!``."""
    eps = Fraction(get_settings().identity_eps if eps is None else eps)
    K = l
    while True:
        lhs = half_e_partial_sum(l, K)
        if lhs.width < eps:
            break
        K += 1
    rhs = exp_neg_half_pow(1, eps) * Fraction(1, double_factorial_even(2 * l))
    ok = lhs.intersects(rhs) and rhs.width < eps
    return CheckReport(f"half_e_identity l={l}", ok,
                       [f"sum {lhs} (K={K}), e^(-1/2)/(2l)!! {rhs}"])


def check_bell_polynomial_identity(n: int, x, eps: Fraction | None = None) -> CheckReport:
    """``Σ_k S(n,k) x^k = e^{-x} Σ_k k^n x^k / k!`` for rational ``x ≥ 0``."""
    eps = Fraction(get_settings().identity_eps if eps is None else eps)
    x = Fraction(x)
    lhs = sum(stirling2(n, k) * x ** k for k in range(n + 1))
    if x == 0:
        rhs = IntervalValue.point(1 if n == 0 else 0)
    else:
        try:
            res = sum_series_1d(lambda k: Fraction(k ** n) * x ** k / math.factorial(k),
                                Majorant(Fraction(1), ((1, 0),) * n, x), x,
                                target_width=eps / 2)
        except SeriesError as exc:
            return CheckReport(f"bell_polynomial n={n} x={x}", False, [str(exc)])
        rhs = res.value
    ok = rhs.contains(lhs) and rhs.width < eps
    return CheckReport(f"bell_polynomial n={n} x={x}", ok, [f"lhs {lhs}, rhs {rhs}"])

