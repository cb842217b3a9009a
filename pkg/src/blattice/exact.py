"""Exact integer counts: classical tables, shape counts, and minimal-partner formulas.

Everything here is finite and exact.  Per-partition counts depend only on
the partition's shape and are computed by coefficient extraction from
:class:`~blattice.algebra.BoundedPoly` products.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import BoundedPoly, product_of_powers
from .enumeration import all_shapes, integer_partitions
from .partitions import PartitionShape


class CountError(ValueError):
    pass


# -- classical tables -------------------------------------------------------

@lru_cache(maxsize=None)
def _stirling2_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling2_row(n - 1) + (0,)
    return tuple((prev[k - 1] if k else 0) + k * prev[k] for k in range(n + 1))


@lru_cache(maxsize=None)
def _stirling1_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling1_row(n - 1) + (0,)
    return tuple((prev[k - 1] if k else 0) - (n - 1) * prev[k] for k in range(n + 1))


def _check_nk(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise CountError(f"negative argument: n={n}, k={k}")
    if k > n:
        raise CountError(f"k={k} exceeds n={n}")


def stirling2(n: int, k: int) -> int:
    _check_nk(n, k)
    return _stirling2_row(n)[k]


def stirling1_signed(n: int, k: int) -> int:
    _check_nk(n, k)
    return _stirling1_row(n)[k]


def bell_number(n: int) -> int:
    if n < 0:
        raise CountError(f"negative n={n}")
    return sum(_stirling2_row(n))


@dataclass(frozen=True)
class CountTable:
    kind: str
    values: tuple

    KINDS = ("stirling2", "stirling1_signed", "bell", "dowling", "n_no_zero")


def count_table(kind: str, size: int) -> CountTable:
    """Rows ``0..size`` (triangular kinds) or values ``0..size`` (linear kinds)."""
    if kind == "stirling2":
        return CountTable(kind, tuple(_stirling2_row(n) for n in range(size + 1)))
    if kind == "stirling1_signed":
        return CountTable(kind, tuple(_stirling1_row(n) for n in range(size + 1)))
    fn = {"bell": bell_number, "dowling": dowling_number, "n_no_zero": n_no_zero}.get(kind)
    if fn is None:
        raise CountError(f"unknown table kind {kind!r}")
    return CountTable(kind, tuple(fn(n) for n in range(size + 1)))


def double_factorial_even(m: int) -> int:
    """``m!! = 2·4·…·m`` for even ``m ≥ 0``."""
    if m < 0 or m % 2:
        raise CountError(f"double_factorial_even needs an even m >= 0, got {m}")
    return (1 << (m // 2)) * math.factorial(m // 2)


def falling_factorial(x, n: int):
    """``x(x-1)…(x-n+1)``; works for ints and Fractions."""
    if n < 0:
        raise CountError(f"negative length {n}")
    out = x ** 0
    for s in range(n):
        out *= x - s
    return out


# -- B_n-partition counts ---------------------------------------------------

def n_no_zero_by_pairs(n: int, k: int) -> int:
    """Zero-block-free B_n-partitions with ``k`` block pairs: ``2^{n-k} S(n,k)``."""
    _check_nk(n, k)
    return (1 << (n - k)) * stirling2(n, k)


def n_no_zero(n: int) -> int:
    return sum(n_no_zero_by_pairs(n, k) for k in range(n + 1))


def dowling_number(n: int) -> int:
    """``|Π_n^B|``: choose the zero-block, then a zero-block-free rest."""
    if n < 0:
        raise CountError(f"negative n={n}")
    return sum(math.comb(n, i0) * n_no_zero(n - i0) for i0 in range(n + 1))


def count_of_shape(shape: PartitionShape) -> int:
    """Number of distinct B_n-partitions of the given (multiset) shape.

    ``n! 2^{n-i0-k} / (i0! ∏ i_α! ∏ m_s!)`` with ``m_s`` the multiplicity of
    each repeated pair size.
    """
    num = (1 << (shape.n - shape.i0 - shape.k)) * math.factorial(shape.n)
    den = math.factorial(shape.i0)
    for s in shape.pair_sizes:
        den *= math.factorial(s)
    for m in shape.multiplicities().values():
        den *= math.factorial(m)
    return num // den


def _ifact(sizes: Sequence[int]) -> int:
    return math.prod(math.factorial(s) for s in sizes)


def _exact_div(num: int | Fraction, den: int, what: str) -> int:
    q = Fraction(num) / den
    if q.denominator != 1:
        raise CountError(f"{what} is not an integer: {q}")
    return q.numerator


def _shifted_indices(sizes: Sequence[int]):
    # all i' with i'_α in {i_α, i_α - 1}
    idxs = [()]
    for s in sizes:
        idxs = [t + (e,) for t in idxs for e in {s, s - 1}]
    return idxs


@lru_cache(maxsize=4096)
def pair_excess_power(caps: tuple[int, ...], m: int) -> BoundedPoly:
    """``(∏(1+x_α)^2 - 1)^m`` truncated to ``caps``."""
    return (product_of_powers(caps, 2) - 1) ** m


def nb_pi_l(shape: PartitionShape, l: int) -> int:
    """B_n-partitions with exactly ``l`` block pairs meeting ``π`` minimally.

    ``𝐢!/(2l-2i0)!! · Σ_{𝐢'} [x^{𝐢'}] (∏(1+x_α)^2-1)^{l-i0} ∏(1+x_α)^{2i0}``
    with ``𝐢'`` ranging over ``i'_α ∈ {i_α, i_α-1}``.  Zero outside
    ``i0 ≤ l ≤ n``.
    """
    if shape.k == 0:
        raise CountError("nb_pi_l needs at least one block pair; use nb_pi")
    if l < shape.i0 or l > shape.n:
        return 0
    caps = shape.pair_sizes
    poly = pair_excess_power(caps, l - shape.i0) * product_of_powers(caps, 2 * shape.i0)
    total = sum(poly.coeff(idx) for idx in _shifted_indices(caps))
    return _exact_div(_ifact(caps) * total, double_factorial_even(2 * (l - shape.i0)), "N^B(π;l)")


def nb_pi(shape: PartitionShape) -> int:
    """All B_n-partitions meeting ``π`` minimally."""
    if shape.k == 0:
        # π is the maximal partition (or empty): only 0̂^B splits it
        return 1
    return sum(nb_pi_l(shape, l) for l in range(shape.i0, shape.n + 1))


def _require_no_zero(shape: PartitionShape) -> None:
    if shape.i0 != 0:
        raise CountError(f"shape {shape} has a zero-block")


def nd_pi_l(shape: PartitionShape, l: int) -> int:
    """Zero-block-free partners with ``l`` pairs: ``𝐢!/(2l)!! [x^𝐢](∏(1+x_α)^2-1)^l``."""
    _require_no_zero(shape)
    if shape.k == 0:
        return 1 if l == 0 else 0
    if l < 0 or l > shape.n:
        return 0
    caps = shape.pair_sizes
    c = pair_excess_power(caps, l).coeff(caps)
    return _exact_div(_ifact(caps) * c, double_factorial_even(2 * l), "N^D(π;l)")


def nd_pi(shape: PartitionShape) -> int:
    _require_no_zero(shape)
    if shape.n == 0:
        return 1
    return sum(nd_pi_l(shape, l) for l in range(1, shape.n + 1))


def _shapes_by(n: int, i0: int, k: int):
    if i0 < 0 or k < 0 or i0 > n:
        return
    for sizes in integer_partitions(n - i0):
        if len(sizes) == k:
            yield PartitionShape(n, i0, sizes)


def n2b_exact_by(i0: int, k: int, n: int) -> int:
    """Ordered minimally intersecting pairs whose first member has type ``(i0; k pairs)``."""
    return sum(count_of_shape(s) * nb_pi(s) for s in _shapes_by(n, i0, k))


def n2b_exact(n: int) -> int:
    """``N_{n,2}^B``, summed over the shape of the first partition."""
    if n < 0:
        raise CountError(f"negative n={n}")
    return sum(count_of_shape(s) * nb_pi(s) for s in all_shapes(n))


def n2d_exact_by(k: int, n: int) -> int:
    return sum(count_of_shape(s) * nd_pi(s) for s in _shapes_by(n, 0, k))


def n2d_exact(n: int) -> int:
    if n < 0:
        raise CountError(f"negative n={n}")
    return sum(count_of_shape(s) * nd_pi(s) for s in all_shapes(n, zero_block=False))


def nd_r_exact(n: int, r: int) -> int:
    """``N_{n,r}^D = Σ_j N_j^r 2^{n-j} s(n,j)``."""
    if n < 0 or r < 1:
        raise CountError(f"need n >= 0 and r >= 1, got n={n}, r={r}")
    return sum(n_no_zero(j) ** r * (1 << (n - j)) * stirling1_signed(n, j) for j in range(n + 1))


# -- ordinary partitions ----------------------------------------------------

def na_pi(block_sizes: Sequence[int]) -> int:
    """Ordinary partitions meeting a partition with these block sizes minimally.

    ``𝐢! Σ_{m≤n} [x^𝐢] (∏(1+x_α) - 1)^m / m!``; the series of the exponential
    stops at ``m = n`` because each factor raises the total degree.
    """
    sizes = tuple(block_sizes)
    if any(s <= 0 for s in sizes):
        raise CountError(f"block sizes must be positive: {sizes}")
    n = sum(sizes)
    if n == 0:
        return 1
    base = product_of_powers(sizes, 1) - 1
    power = BoundedPoly.constant(sizes, 1)
    total = Fraction(0)
    for m in range(n + 1):
        total += Fraction(power.coeff(sizes), math.factorial(m))
        power = power * base
    return _exact_div(total * _ifact(sizes), 1, "N(π)")


def na_r_exact(n: int, r: int) -> int:
    """``N_{n,r} = Σ_j B_j^r s(n,j)``."""
    if n < 0 or r < 1:
        raise CountError(f"need n >= 0 and r >= 1, got n={n}, r={r}")
    return sum(bell_number(j) ** r * stirling1_signed(n, j) for j in range(n + 1))
