"""Exhaustive generators for Π_n, Π_n^B and their fixed-shape slices.

Every generator yields canonical :class:`SignedPartition` values directly, so
no deduplication pass is needed.  Ordinary partitions of [n] come out in the
all-positive embedding.
"""
from __future__ import annotations

from collections import Counter
from itertools import combinations, product
from typing import Iterator

from .config import BoundExceeded, get_settings
from .partitions import PartitionShape, SignedPartition

UNIVERSES = ("B", "no_zero", "A")


def _check_bound(n: int, max_n: int | None) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    bound = get_settings().max_n if max_n is None else max_n
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the enumeration bound {bound}")


def _grow(n: int, allow_zero: bool, allow_signs: bool) -> Iterator[SignedPartition]:
    # Element a goes into an existing pair-block (either sign), a new
    # pair-block, or the zero-block.
    zero: list[int] = []
    blocks: list[list[int]] = []

    def rec(a: int):
        if a > n:
            yield SignedPartition(n, tuple(zero), tuple(tuple(b) for b in blocks))
            return
        for b in blocks:
            for s in ((1, -1) if allow_signs else (1,)):
                b.append(s * a)
                yield from rec(a + 1)
                b.pop()
        blocks.append([a])
        yield from rec(a + 1)
        blocks.pop()
        if allow_zero:
            zero.append(a)
            yield from rec(a + 1)
            zero.pop()

    yield from rec(1)


def enumerate_b(n: int, max_n: int | None = None) -> Iterator[SignedPartition]:
    """All B_n-partitions, each exactly once."""
    _check_bound(n, max_n)
    return _grow(n, allow_zero=True, allow_signs=True)


def enumerate_b_no_zero(n: int, max_n: int | None = None) -> Iterator[SignedPartition]:
    """All B_n-partitions without zero-block."""
    _check_bound(n, max_n)
    return _grow(n, allow_zero=False, allow_signs=True)


def enumerate_a(n: int, max_n: int | None = None) -> Iterator[SignedPartition]:
    """All ordinary partitions of [n], as all-positive B_n-partitions."""
    _check_bound(n, max_n)
    return _grow(n, allow_zero=False, allow_signs=False)


def enumerate_universe(n: int, universe: str, max_n: int | None = None) -> Iterator[SignedPartition]:
    if universe == "B":
        return enumerate_b(n, max_n)
    if universe == "no_zero":
        return enumerate_b_no_zero(n, max_n)
    if universe == "A":
        return enumerate_a(n, max_n)
    raise ValueError(f"unknown universe {universe!r}; expected one of {UNIVERSES}")


def _signed_versions(block: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    head, rest = block[0], block[1:]
    for signs in product((1, -1), repeat=len(rest)):
        yield (head,) + tuple(s * x for s, x in zip(signs, rest))


def _blocks_of_sizes(elements: tuple[int, ...], sizes: Counter) -> Iterator[list[tuple[int, ...]]]:
    # The smallest free element opens the next block, so blocks come out
    # ordered by their minimum.
    if not elements:
        yield []
        return
    head, rest = elements[0], elements[1:]
    for size in sorted(sizes):
        if sizes[size] == 0:
            continue
        sizes[size] -= 1
        for others in combinations(rest, size - 1):
            left = tuple(x for x in rest if x not in others)
            for tail in _blocks_of_sizes(left, sizes):
                yield [(head,) + others] + tail
        sizes[size] += 1


def enumerate_by_shape(shape: PartitionShape, max_n: int | None = None) -> Iterator[SignedPartition]:
    """All B_n-partitions of type ``shape``."""
    n = shape.n
    _check_bound(n, max_n)
    sizes = Counter(shape.pair_sizes)
    for zero in combinations(range(1, n + 1), shape.i0):
        rest = tuple(a for a in range(1, n + 1) if a not in zero)
        for blocks in _blocks_of_sizes(rest, sizes):
            for signed in product(*(_signed_versions(b) for b in blocks)):
                yield SignedPartition(n, zero, tuple(signed))


def all_shapes(n: int, zero_block: bool | None = None) -> Iterator[PartitionShape]:
    """Every shape of size ``n``; ``zero_block`` restricts to i0 > 0 or i0 = 0."""
    for i0 in range(n + 1):
        if zero_block is True and i0 == 0:
            continue
        if zero_block is False and i0 > 0:
            break
        for sizes in integer_partitions(n - i0):
            yield PartitionShape(n, i0, sizes)


def integer_partitions(m: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``m`` as nonincreasing tuples."""
    if largest is None:
        largest = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in integer_partitions(m - first, first):
            yield (first,) + rest
