"""Rigorous enclosures of the Dobiński-type series and integer recovery.

Each series has the shape ``scale · e^{-a} · Σ terms`` with nonnegative
rational terms.  Partial sums are exact; the only rounding happens in the
enclosure of ``e^{-a}``.  Tails are bounded by a majorant

    u(j) = const · ∏ (a_i j + b_i) · ρ^j / j!

whose consecutive ratio is nonincreasing once every linear factor is
positive, so ``Σ_{j>J} u(j) ≤ u(J) q/(1-q)`` with ``q = u(J+1)/u(J) < 1``.
Multi-index sums use a product majorant: a bound ``(f)_n ≤ κ^n ∏ φ(l_t)^n``
splits the sum outside the box ``[0, L]^r`` into one-dimensional tails.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

from .algebra import IntervalValue, exp_neg, product_of_powers
from .config import get_settings
from .exact import double_factorial_even, falling_factorial
from .partitions import PartitionShape

HALF = Fraction(1, 2)


class SeriesError(ValueError):
    """A tail bound could not be certified."""


@dataclass(frozen=True)
class SeriesResult:
    value: IntervalValue
    terms_used: int
    recovered_integer: int | None
    cutoff: int = 0

    @property
    def resolved(self) -> bool:
        return self.recovered_integer is not None

    def __str__(self):
        rec = self.recovered_integer if self.resolved else "UNRESOLVED"
        return f"{self.value} terms={self.terms_used} -> {rec}"


@dataclass(frozen=True)
class Majorant:
    """``const · ∏(a j + b) · rho^j / j!`` with every ``a ≥ 0``."""

    const: Fraction
    factors: tuple[tuple[int, int], ...]
    rho: Fraction

    def __call__(self, j: int) -> Fraction:
        val = Fraction(self.const) * self.rho ** j / math.factorial(j)
        for a, b in self.factors:
            val *= a * j + b
        return val

    def positive_from(self) -> int | None:
        """Smallest index from which every factor is positive."""
        start = 0
        for a, b in self.factors:
            if a == 0:
                if b <= 0:
                    return None
            elif b <= 0:
                start = max(start, -b // a + 1)
        return start

    def tail(self, J: int) -> tuple[Fraction, Fraction] | None:
        """``(bound on Σ_{j>J} u(j), ratio u(J+1)/u(J))`` or None if not certifiable."""
        if self.const == 0:
            return Fraction(0), Fraction(0)
        start = self.positive_from()
        if start is None or J < start:
            return None
        uJ = self(J)
        q = self(J + 1) / uJ
        if q >= 1:
            return None
        return uJ * q / (1 - q), q


def _decimal_eps(x: Fraction) -> Fraction:
    # round down to a power of ten so exp enclosures get reused
    d = max(1, math.ceil(-math.log10(x))) if x < 1 else 1
    return Fraction(1, 10 ** d)


def _finish(partial: Fraction, tail: Fraction, terms: int, cutoff: int, exp_arg: Fraction,
            scale: Fraction, target: Fraction, exp_eps: Fraction | None) -> SeriesResult:
    upper = partial + tail
    if exp_eps is None:
        exp_eps = _decimal_eps(target / (4 * scale * max(upper, Fraction(1))))
    e = exp_neg(exp_arg, exp_eps)
    value = IntervalValue(scale * e.lo * partial, scale * e.hi * upper)
    rec = value.unique_integer() if value.width < HALF else None
    return SeriesResult(value, terms, rec, cutoff)


def _defaults(target_width, max_terms):
    s = get_settings()
    target = Fraction(s.target_width if target_width is None else target_width)
    if target <= 0:
        raise ValueError("target width must be positive")
    return target, s.series_max_terms if max_terms is None else max_terms


def sum_series_1d(term: Callable[[int], Fraction], majorant: Majorant, exp_arg: Fraction,
                  scale: Fraction = Fraction(1), *, target_width=None, max_terms=None,
                  truncation: int | None = None, exp_eps: Fraction | None = None) -> SeriesResult:
    """Enclose ``scale · e^{-exp_arg} · Σ_{j≥0} term(j)``.

    ``majorant`` must dominate ``term`` from its ``positive_from`` index on.
    Without ``truncation`` the cutoff is the first index where the majorant
    ratio is at most 1/2 and the scaled tail is below a quarter of the
    target width.
    """
    target, max_terms = _defaults(target_width, max_terms)
    scale, exp_arg = Fraction(scale), Fraction(exp_arg)
    partial = Fraction(0)
    if truncation is not None:
        for j in range(truncation + 1):
            partial += term(j)
        cert = majorant.tail(truncation)
        if cert is None:
            raise SeriesError(f"tail after index {truncation} cannot be certified")
        return _finish(partial, cert[0], truncation + 1, truncation, exp_arg, scale, target, exp_eps)

    best = None
    for j in range(max_terms):
        partial += term(j)
        cert = majorant.tail(j)
        if cert is None:
            continue
        best = (partial, cert[0], j)
        if cert[1] <= HALF and scale * cert[0] < target / 4:
            break
    if best is None:
        raise SeriesError(f"no certifiable tail within {max_terms} terms")
    partial, tail, j = best
    return _finish(partial, tail, j + 1, j, exp_arg, scale, target, exp_eps)


def sum_series_box(n: int, r: int, f: Callable[[tuple[int, ...]], int], kappa: Fraction,
                   phi: tuple[int, int], rho: Fraction, exp_arg: Fraction, scale: Fraction, *,
                   target_width=None, max_terms=None, truncation: int | None = None,
                   exp_eps: Fraction | None = None) -> SeriesResult:
    """Enclose ``scale · e^{-exp_arg} · Σ_{l ∈ ℕ^r} (f(l))_n ρ^{Σl} / ∏ l_t!``.

    Requires ``0 ≤ f(l) ≤ κ ∏ φ(l_t)`` with ``φ(l) = φ0 l + φ1`` and ``f``
    integer valued, so that ``(f)_n`` is nonnegative.
    """
    target, max_terms = _defaults(target_width, max_terms)
    kappa, rho = Fraction(kappa), Fraction(rho)
    g = Majorant(Fraction(1), (phi,) * n, rho)
    kn = kappa ** n

    def bound(L: int, G: Fraction):
        cert = g.tail(L)
        if cert is None:
            return None
        t, q = cert
        return kn * r * t * (G + t) ** (r - 1), q

    G = Fraction(0)
    if truncation is not None:
        L = truncation
        for l in range(L + 1):
            G += g(l)
        cert = bound(L, G)
        if cert is None:
            raise SeriesError(f"box tail at L={L} cannot be certified")
        tail = cert[0]
    else:
        L, tail = None, None
        l = 0
        while (l + 1) ** r <= max_terms:
            G += g(l)
            cert = bound(l, G)
            if cert is not None:
                L, tail = l, cert[0]
                if cert[1] <= HALF and scale * tail < target / 4:
                    break
            l += 1
        if L is None:
            raise SeriesError(f"no certifiable box within {max_terms} terms")

    inv_rho = 1 / rho
    if inv_rho.denominator != 1:
        raise ValueError("rho must be the reciprocal of an integer")
    inv_rho = inv_rho.numerator
    denom = [math.factorial(l) * inv_rho ** l for l in range(L + 1)]
    weight = [denom[L] // d for d in denom]
    num = 0
    for idx in product(range(L + 1), repeat=r):
        ff = falling_factorial(f(idx), n)
        if ff:
            num += ff * math.prod(weight[l] for l in idx)
    partial = Fraction(num, denom[L] ** r)
    return _finish(partial, tail, (L + 1) ** r, L, Fraction(exp_arg), Fraction(scale),
                   target, exp_eps)


# -- one-dimensional series -------------------------------------------------

def _dfact_term(numerator: Callable[[int], int | Fraction]) -> Callable[[int], Fraction]:
    return lambda j: Fraction(numerator(j), double_factorial_even(2 * j))


def dobinski(n: int, **kw) -> SeriesResult:
    """``(1/e) Σ_k k^n / k!``, the Bell number ``B_n``."""
    return sum_series_1d(lambda k: Fraction(k ** n, math.factorial(k)),
                         Majorant(Fraction(1), ((1, 0),) * n, Fraction(1)), Fraction(1), **kw)


def benoumhani_dowling(n: int, **kw) -> SeriesResult:
    """``e^{-1/2} Σ_k (2k+1)^n / (2k)!!``, the Dowling number."""
    return sum_series_1d(_dfact_term(lambda k: (2 * k + 1) ** n),
                         Majorant(Fraction(1), ((2, 1),) * n, HALF), HALF, **kw)


def nn_series(n: int, **kw) -> SeriesResult:
    """``e^{-1/2} Σ_k (2k)^n / (2k)!!``, the zero-block-free count ``N_n``."""
    return sum_series_1d(_dfact_term(lambda k: (2 * k) ** n),
                         Majorant(Fraction(1), ((2, 0),) * n, HALF), HALF, **kw)


def nb_pi_series(shape: PartitionShape, **kw) -> SeriesResult:
    """``e^{-1/2} Σ_j ∏_α (2i0+2j+1)_{i_α} / (2j)!!``, the minimal-partner count."""
    i0, sizes = shape.i0, shape.pair_sizes

    def numerator(j):
        m = 2 * i0 + 2 * j + 1
        return math.prod(falling_factorial(m, s) for s in sizes)

    factors = tuple((2, 2 * i0 + 1 - s) for size in sizes for s in range(size))
    return sum_series_1d(_dfact_term(numerator), Majorant(Fraction(1), factors, HALF), HALF, **kw)


def _excess_coeff(base_exp: int, k: int, degree: int) -> int:
    """``[x^degree] ((1+x)^base_exp - 1)^k``."""
    return ((product_of_powers((degree,), base_exp) - 1) ** k).coeff((degree,))


def _binomial_majorant(slope: int, offset: int, degree: int, k: int) -> Majorant:
    # C(slope·j + offset, degree) dominates [x^degree]((1+x)^m - 1)^k with m·k = slope·j + offset
    if k == 0:
        return Majorant(Fraction(1 if degree == 0 else 0), (), HALF)
    return Majorant(Fraction(1, math.factorial(degree)),
                    tuple((slope, offset - s) for s in range(degree)), HALF)


def n2b_series_by(i0: int, k: int, n: int, **kw) -> SeriesResult:
    """Pairs whose first member has a zero-block of half-size ``i0`` and ``k`` pairs.

    ``(2n)!!/((2i0)!!(2k)!!) e^{-1/2} [x^{n-i0}] Σ_j ((1+x)^{2i0+2j+1} - 1)^k / (2j)!!``.
    """
    if not 0 <= i0 <= n or k < 0:
        raise ValueError(f"invalid (i0, k, n) = ({i0}, {k}, {n})")
    d = n - i0
    scale = Fraction(double_factorial_even(2 * n),
                     double_factorial_even(2 * i0) * double_factorial_even(2 * k))
    term = _dfact_term(lambda j: _excess_coeff(2 * i0 + 2 * j + 1, k, d))
    return sum_series_1d(term, _binomial_majorant(2 * k, k * (2 * i0 + 1), d, k), HALF, scale, **kw)


def n2d_series_by(k: int, n: int, **kw) -> SeriesResult:
    """Zero-block-free pairs whose first member has ``k`` pairs.

    ``(2n)!!/(2k)!! e^{-1/2} [x^n] Σ_j ((1+x)^{2j} - 1)^k / (2j)!!``.
    """
    if n < 0 or k < 0:
        raise ValueError(f"invalid (k, n) = ({k}, {n})")
    scale = Fraction(double_factorial_even(2 * n), double_factorial_even(2 * k))
    term = _dfact_term(lambda j: _excess_coeff(2 * j, k, n))
    return sum_series_1d(term, _binomial_majorant(2 * k, 0, n, k), HALF, scale, **kw)


# -- multi-index series -----------------------------------------------------

def _check_nr(n: int, r: int) -> None:
    if n < 0 or r < 1:
        raise ValueError(f"need n >= 0 and r >= 1, got n={n}, r={r}")


def nbr_series(n: int, r: int, **kw) -> SeriesResult:
    """``2^n e^{-r/2} Σ (f_r)_n / ∏(2l_t)!!`` with ``f_r = (∏(2l_t+1) - 1)/2``."""
    _check_nr(n, r)

    def f(ls: Sequence[int]) -> int:
        return (math.prod(2 * l + 1 for l in ls) - 1) // 2

    return sum_series_box(n, r, f, HALF, (2, 1), HALF, Fraction(r, 2), Fraction(2 ** n), **kw)


def n2b_series(n: int, **kw) -> SeriesResult:
    """``2^n/e Σ_{k,l} (2kl+k+l)_n / ((2k)!!(2l)!!)``."""
    return nbr_series(n, 2, **kw)


def ndr_series(n: int, r: int, **kw) -> SeriesResult:
    """``2^n e^{-r/2} Σ (2^{r-1} k_1⋯k_r)_n / ∏(2k_t)!!``."""
    _check_nr(n, r)
    c = 2 ** (r - 1)
    return sum_series_box(n, r, lambda ks: c * math.prod(ks), Fraction(c), (1, 0), HALF,
                          Fraction(r, 2), Fraction(2 ** n), **kw)


def n2d_series(n: int, **kw) -> SeriesResult:
    """``2^n/e Σ_{k,l} (2kl)_n / ((2k)!!(2l)!!)``."""
    return ndr_series(n, 2, **kw)


def pittel_nar_series(n: int, r: int, **kw) -> SeriesResult:
    """``e^{-r} Σ (k_1⋯k_r)_n / ∏ k_t!``, ordinary minimally intersecting r-tuples."""
    _check_nr(n, r)
    return sum_series_box(n, r, math.prod, Fraction(1), (1, 0), Fraction(1), Fraction(r),
                          Fraction(1), **kw)
