"""Exact algebra: degree-capped polynomials, truncated series, rational intervals.

Truncating a product to per-variable caps never changes a retained
coefficient, because the coefficient of a monomial only depends on the
coefficients of monomials dividing it.  Coefficient extraction at indices
within the caps is therefore exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence


class AlgebraError(ValueError):
    pass


class BoundedPoly:
    """Polynomial in ``len(caps)`` variables with integer coefficients, degree ≤ caps."""

    __slots__ = ("caps", "coeffs")

    def __init__(self, caps: Sequence[int], coeffs: Mapping[tuple[int, ...], int] | None = None):
        self.caps = tuple(caps)
        if any(c < 0 for c in self.caps):
            raise AlgebraError(f"negative degree cap in {self.caps}")
        self.coeffs: dict[tuple[int, ...], int] = {}
        for idx, c in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != len(self.caps):
                raise AlgebraError(f"index {idx} has wrong arity for caps {self.caps}")
            if c and self._fits(idx):
                self.coeffs[idx] = self.coeffs.get(idx, 0) + c

    @property
    def num_vars(self) -> int:
        return len(self.caps)

    def _fits(self, idx) -> bool:
        return all(0 <= e <= c for e, c in zip(idx, self.caps))

    @classmethod
    def constant(cls, caps: Sequence[int], c: int = 1) -> "BoundedPoly":
        return cls(caps, {(0,) * len(caps): c})

    @classmethod
    def linear_factor(cls, caps: Sequence[int], var: int, c0: int = 1, c1: int = 1) -> "BoundedPoly":
        """``c0 + c1 * x_var``."""
        one = [0] * len(caps)
        one[var] = 1
        return cls(caps, {(0,) * len(caps): c0, tuple(one): c1})

    @classmethod
    def univariate(cls, cap: int, coeffs: Iterable[int]) -> "BoundedPoly":
        return cls((cap,), {(i,): c for i, c in enumerate(coeffs)})

    def _check(self, other: "BoundedPoly") -> None:
        if self.caps != other.caps:
            raise AlgebraError(f"cap mismatch: {self.caps} vs {other.caps}")

    def __mul__(self, other):
        if isinstance(other, int):
            return BoundedPoly(self.caps, {i: c * other for i, c in self.coeffs.items()})
        self._check(other)
        caps = self.caps
        out: dict[tuple[int, ...], int] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                idx = tuple(x + y for x, y in zip(i, j))
                if all(e <= c for e, c in zip(idx, caps)):
                    out[idx] = out.get(idx, 0) + a * b
        return BoundedPoly(caps, out)

    __rmul__ = __mul__

    def __add__(self, other):
        if isinstance(other, int):
            other = BoundedPoly.constant(self.caps, other)
        self._check(other)
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, 0) + c
        return BoundedPoly(self.caps, out)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other if isinstance(other, BoundedPoly) else -other)

    def __pow__(self, m: int):
        if m < 0:
            raise AlgebraError("negative exponent")
        result = BoundedPoly.constant(self.caps, 1)
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def __eq__(self, other):
        return isinstance(other, BoundedPoly) and self.caps == other.caps and self.coeffs == other.coeffs

    def __repr__(self):
        return f"BoundedPoly(caps={self.caps}, coeffs={dict(sorted(self.coeffs.items()))})"

    def coeff(self, idx: Sequence[int]) -> int:
        idx = tuple(idx)
        if len(idx) != len(self.caps) or not self._fits(idx):
            raise AlgebraError(f"index {idx} outside caps {self.caps}")
        return self.coeffs.get(idx, 0)


def poly_mul(a: BoundedPoly, b: BoundedPoly) -> BoundedPoly:
    return a * b


def poly_pow(a: BoundedPoly, m: int) -> BoundedPoly:
    return a ** m


def poly_sub_const(a: BoundedPoly, c: int) -> BoundedPoly:
    return a - c


def poly_coeff(a: BoundedPoly, idx: Sequence[int]) -> int:
    return a.coeff(idx)


def product_of_powers(caps: Sequence[int], exponent: int) -> BoundedPoly:
    """``∏_α (1 + x_α)^exponent`` truncated to ``caps``."""
    result = BoundedPoly.constant(caps, 1)
    for var, cap in enumerate(caps):
        factor = BoundedPoly(caps, {
            tuple(e if v == var else 0 for v in range(len(caps))): math.comb(exponent, e)
            for e in range(cap + 1)})
        result = result * factor
    return result


# -- truncated power series -------------------------------------------------

@dataclass(frozen=True)
class RationalSeries:
    """``Σ_{i≤order} coeffs[i] x^i`` with exact rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise AlgebraError("a series needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_egf(cls, values: Sequence[int | Fraction]) -> "RationalSeries":
        """Series ``Σ values[n] x^n / n!``."""
        return cls(tuple(Fraction(v) / math.factorial(i) for i, v in enumerate(values)))

    def egf_values(self) -> list[Fraction]:
        return [c * math.factorial(i) for i, c in enumerate(self.coeffs)]

    def truncate(self, N: int) -> "RationalSeries":
        c = list(self.coeffs[:N + 1])
        c += [Fraction(0)] * (N + 1 - len(c))
        return RationalSeries(tuple(c))

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if i < len(self.coeffs) else Fraction(0)


def series_mul(a: RationalSeries, b: RationalSeries, N: int) -> RationalSeries:
    out = [Fraction(0)] * (N + 1)
    for i, x in enumerate(a.coeffs[:N + 1]):
        if x:
            for j, y in enumerate(b.coeffs[:N + 1 - i]):
                out[i + j] += x * y
    return RationalSeries(tuple(out))


def series_pow(a: RationalSeries, m: int, N: int) -> RationalSeries:
    if m < 0:
        raise AlgebraError("negative exponent")
    result = RationalSeries((Fraction(1),)).truncate(N)
    for _ in range(m):
        result = series_mul(result, a, N)
    return result


def series_compose(f: RationalSeries, g: RationalSeries, N: int) -> RationalSeries:
    """``f(g(x))`` to order ``N``; ``g`` must have zero constant term."""
    if g[0] != 0:
        raise AlgebraError("inner series of a composition must have zero constant term")
    out = [Fraction(0)] * (N + 1)
    power = RationalSeries((Fraction(1),)).truncate(N)
    for k in range(N + 1):
        fk = f[k]
        if fk:
            for i, c in enumerate(power.coeffs):
                out[i] += fk * c
        power = series_mul(power, g, N)
    return RationalSeries(tuple(out))


def exp_series(N: int, scale: int | Fraction = 1) -> RationalSeries:
    """``exp(scale·x)`` to order ``N``."""
    s = Fraction(scale)
    return RationalSeries(tuple(s ** i / math.factorial(i) for i in range(N + 1)))


def log1p_series(N: int) -> RationalSeries:
    return RationalSeries((Fraction(0),) + tuple(Fraction((-1) ** (i + 1), i) for i in range(1, N + 1)))


# -- rational intervals -----------------------------------------------------

@dataclass(frozen=True)
class IntervalValue:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise AlgebraError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> "IntervalValue":
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def intersects(self, other: "IntervalValue") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def integers(self) -> range:
        return range(math.ceil(self.lo), math.floor(self.hi) + 1)

    def unique_integer(self) -> int | None:
        ints = self.integers()
        return ints[0] if len(ints) == 1 else None

    def __add__(self, other):
        if isinstance(other, IntervalValue):
            return IntervalValue(self.lo + other.lo, self.hi + other.hi)
        return IntervalValue(self.lo + other, self.hi + other)

    __radd__ = __add__

    def __mul__(self, other):
        if not isinstance(other, IntervalValue):
            other = IntervalValue.point(other)
        ends = [a * b for a in (self.lo, self.hi) for b in (other.lo, other.hi)]
        return IntervalValue(min(ends), max(ends))

    __rmul__ = __mul__

    def __str__(self):
        return f"[{float(self.lo):.12g}, {float(self.hi):.12g}]"


def _outward(lo: Fraction, hi: Fraction, grid: int) -> tuple[Fraction, Fraction]:
    return (Fraction(math.floor(lo * grid), grid), Fraction(math.ceil(hi * grid), grid))


@lru_cache(maxsize=256)
def exp_neg(x: Fraction, eps: Fraction) -> IntervalValue:
    """Enclosure of ``e^{-x}`` (``x ≥ 0`` rational) of width below ``eps``.

    Sums the positive Taylor series of ``e^x``; once ``x/(K+2) ≤ 1/2`` the
    tail after term ``K`` is at most ``2·x^{K+1}/(K+1)!``.  The reciprocal
    is rounded outward to a dyadic grid to keep denominators small.
    """
    x, eps = Fraction(x), Fraction(eps)
    if x < 0 or eps <= 0:
        raise AlgebraError("exp_neg needs x >= 0 and eps > 0")
    if x == 0:
        return IntervalValue(1, 1)
    total = Fraction(1)
    term = Fraction(1)
    k = 0
    while True:
        k += 1
        term = term * x / k
        total += term
        nxt = term * x / (k + 1)
        if 2 * x <= k + 2:
            tail = nxt / (1 - x / (k + 2))
            if tail <= eps / 8:
                break
    lo, hi = 1 / (total + tail), 1 / total
    grid = 1 << max(1, math.ceil(math.log2(8 / eps)), math.ceil(math.log2(4 / lo)) + 1)
    lo, hi = _outward(lo, hi, grid)
    return IntervalValue(lo, hi)


def exp_neg_half_pow(r: int, eps: Fraction) -> IntervalValue:
    """Enclosure of ``e^{-r/2}``."""
    if r < 1:
        raise AlgebraError(f"exp_neg_half_pow needs r >= 1, got {r}")
    return exp_neg(Fraction(r, 2), Fraction(eps))
