"""Type-B set partitions of [±n] and their meet.

A :class:`SignedPartition` stores at most one zero-block ``Z = -Z`` (by its
positive half) and one representative block per block pair ``±B``.  The
representative is the member whose element of smallest absolute value is
positive, and representatives are listed by that element.  These rules give
every B_n-partition exactly one encoding.

Ordinary partitions of [n] embed as the zero-block-free partitions whose
blocks are all positive; meets of such partitions stay in the image, so the
same machinery serves the type-A baseline.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Sequence


class PartitionError(ValueError):
    """Invalid partition data or incompatible operands."""


@dataclass(frozen=True)
class PartitionShape:
    """Type ``(i0; pair_sizes)`` of a B_n-partition; ``pair_sizes`` is a multiset."""

    n: int
    i0: int
    pair_sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(sorted(self.pair_sizes))
        object.__setattr__(self, "pair_sizes", sizes)
        if self.n < 0 or self.i0 < 0:
            raise PartitionError(f"negative size in shape {self}")
        if any(s <= 0 for s in sizes):
            raise PartitionError(f"pair sizes must be positive: {sizes}")
        if self.i0 + sum(sizes) != self.n:
            raise PartitionError(
                f"shape does not cover n={self.n}: i0={self.i0}, sizes={sizes}")

    @property
    def k(self) -> int:
        return len(self.pair_sizes)

    def multiplicities(self) -> Counter:
        return Counter(self.pair_sizes)

    def __str__(self):
        return f"({self.i0}; {{{', '.join(map(str, self.pair_sizes))}}})"


def _canonical_block(block: Iterable[int]) -> tuple[int, ...]:
    b = sorted(block, key=lambda x: (abs(x), x))
    if b and b[0] < 0:
        b = [-x for x in b]
    return tuple(b)


@dataclass(frozen=True)
class SignedPartition:
    n: int
    zero: tuple[int, ...] = ()
    pairs: tuple[tuple[int, ...], ...] = ()
    # per-element block labels, derived; see _labels
    _lab: tuple[int, ...] = field(default=(), repr=False, compare=False, hash=False)

    @property
    def zero_block(self) -> frozenset[int] | None:
        return frozenset(self.zero) if self.zero else None

    @property
    def num_pairs(self) -> int:
        return len(self.pairs)

    @property
    def has_zero_block(self) -> bool:
        return bool(self.zero)

    @property
    def is_positive(self) -> bool:
        """True for embedded ordinary partitions (no zero-block, no negative entry)."""
        return not self.zero and all(x > 0 for b in self.pairs for x in b)

    def blocks(self) -> list[frozenset[int]]:
        """All blocks of the partition as subsets of [±n]."""
        out = []
        if self.zero:
            out.append(frozenset(self.zero) | frozenset(-a for a in self.zero))
        for b in self.pairs:
            out.append(frozenset(b))
            out.append(frozenset(-x for x in b))
        return out

    @cached_property
    def labels(self) -> tuple[int, ...]:
        """Block label of each signed element.

        Index ``a-1`` holds the label of ``a`` and ``n+a-1`` that of ``-a``.
        The zero-block has label 0; pair ``i`` has labels ``2i+1`` (the
        representative) and ``2i+2`` (its opposite).
        """
        if self._lab:
            return self._lab
        n = self.n
        lab = [0] * (2 * n)
        for i, b in enumerate(self.pairs):
            for x in b:
                a = abs(x)
                pos, neg = (2 * i + 1, 2 * i + 2) if x > 0 else (2 * i + 2, 2 * i + 1)
                lab[a - 1] = pos
                lab[n + a - 1] = neg
        return tuple(lab)

    def to_json(self) -> dict:
        return {"n": self.n, "zero": list(self.zero), "pairs": [list(b) for b in self.pairs]}

    def __str__(self):
        parts = []
        if self.zero:
            parts.append("{" + ",".join(f"±{a}" for a in self.zero) + "}")
        parts.extend("±{" + ",".join(map(str, b)) + "}" for b in self.pairs)
        return "{" + ", ".join(parts) + "}"


def make_partition(n: int, zero_block: Iterable[int] | None = None,
                   pairs: Sequence[Iterable[int]] = ()) -> SignedPartition:
    """Validate raw blocks and return the canonical partition.

    ``pairs`` may list one or both members of a block pair; duplicates of the
    same pair collapse.  The zero-block is given by its absolute values.
    """
    if n < 0:
        raise PartitionError(f"n must be nonnegative, got {n}")
    zero = sorted({abs(a) for a in (zero_block or ())})
    seen: dict[int, str] = {}
    for a in zero:
        if not 1 <= a <= n:
            raise PartitionError(f"zero-block element {a} outside [1, {n}]")
        seen[a] = "zero-block"

    reps: list[tuple[int, ...]] = []
    for raw in pairs:
        raw = list(raw)
        if not raw:
            raise PartitionError("empty pair-block")
        if len(set(raw)) != len(raw):
            raise PartitionError(f"repeated element in block {raw}")
        for x in raw:
            if x == 0 or abs(x) > n:
                raise PartitionError(f"element {x} outside [±{n}]")
        absvals = [abs(x) for x in raw]
        if len(set(absvals)) != len(absvals):
            raise PartitionError(f"block {sorted(raw)} meets its own negation")
        rep = _canonical_block(raw)
        if rep in reps:
            continue
        for a in absvals:
            if a in seen:
                raise PartitionError(f"element ±{a} appears in block {sorted(raw)} and in {seen[a]}")
            seen[a] = f"block {sorted(raw)}"
        reps.append(rep)

    missing = [a for a in range(1, n + 1) if a not in seen]
    if missing:
        raise PartitionError(f"elements not covered: {missing}")
    reps.sort(key=lambda b: b[0])
    return SignedPartition(n, tuple(zero), tuple(reps))


def canonicalize(p: SignedPartition) -> SignedPartition:
    return make_partition(p.n, p.zero, p.pairs)


def from_blocks(n: int, blocks: Iterable[Iterable[int]]) -> SignedPartition:
    """Build a partition from its full list of blocks over [±n]."""
    zero: list[int] = []
    pairs = []
    has_zero = False
    for b in blocks:
        b = set(b)
        if b and b == {-x for x in b}:
            if has_zero:
                raise PartitionError("more than one zero-block")
            has_zero = True
            zero = [x for x in b if x > 0]
        else:
            pairs.append(b)
    return make_partition(n, zero, pairs)


def from_set_partition(n: int, blocks: Iterable[Iterable[int]]) -> SignedPartition:
    """Embed an ordinary partition of [n] as an all-positive B_n-partition."""
    blocks = [list(b) for b in blocks]
    if any(x <= 0 for b in blocks for x in b):
        raise PartitionError("ordinary partitions use positive elements only")
    return make_partition(n, (), blocks)


def minimal_partition(n: int) -> SignedPartition:
    if n < 0:
        raise PartitionError(f"n must be nonnegative, got {n}")
    return SignedPartition(n, (), tuple((a,) for a in range(1, n + 1)))


def maximal_partition(n: int) -> SignedPartition:
    if n < 0:
        raise PartitionError(f"n must be nonnegative, got {n}")
    return SignedPartition(n, tuple(range(1, n + 1)), ())


def shape_of(p: SignedPartition) -> PartitionShape:
    return PartitionShape(p.n, len(p.zero), tuple(len(b) for b in p.pairs))


def _check_same_n(p: SignedPartition, q: SignedPartition) -> None:
    if p.n != q.n:
        raise PartitionError(f"dimension mismatch: n={p.n} vs n={q.n}")


def meet_labels(n: int, lp: Sequence[int], lq: Sequence[int]) -> SignedPartition:
    """Meet of two partitions given by their label vectors.

    An element lies in the result's zero-block exactly when it lies in both
    zero-blocks.  Other blocks are the classes of equal label pairs; the
    opposite of a class has the swapped labels, so each pair is discovered
    from its smallest element, which is positive.
    """
    zero = []
    reps: list[list[int]] = []
    where: dict[tuple[int, int], tuple[int, int]] = {}
    lab = [0] * (2 * n)
    for a in range(1, n + 1):
        x, y = lp[a - 1], lq[a - 1]
        if x == 0 and y == 0:
            zero.append(a)
            continue
        key = (x, y)
        hit = where.get(key)
        if hit is None:
            i = len(reps)
            xn = lp[n + a - 1]
            yn = lq[n + a - 1]
            where[key] = (i, 1)
            where[(xn, yn)] = (i, -1)
            reps.append([a])
            lab[a - 1], lab[n + a - 1] = 2 * i + 1, 2 * i + 2
        else:
            i, s = hit
            reps[i].append(s * a)
            if s > 0:
                lab[a - 1], lab[n + a - 1] = 2 * i + 1, 2 * i + 2
            else:
                lab[a - 1], lab[n + a - 1] = 2 * i + 2, 2 * i + 1
    return SignedPartition(n, tuple(zero), tuple(map(tuple, reps)), tuple(lab))


def meet(p: SignedPartition, q: SignedPartition) -> SignedPartition:
    """Greatest common refinement of ``p`` and ``q``."""
    _check_same_n(p, q)
    return meet_labels(p.n, p.labels, q.labels)


def meet_all(parts: Sequence[SignedPartition]) -> SignedPartition:
    if not parts:
        raise PartitionError("meet of an empty tuple")
    return reduce(meet, parts)


def refines(p: SignedPartition, q: SignedPartition) -> bool:
    """True iff every block of ``p`` lies inside a block of ``q``."""
    _check_same_n(p, q)
    lq = q.labels
    n = p.n
    first: dict[int, int] = {}
    lp = p.labels
    for idx in range(2 * n):
        label = lp[idx]
        target = lq[idx]
        if first.setdefault(label, target) != target:
            return False
    return True


def is_minimally_intersecting(parts: Sequence[SignedPartition]) -> bool:
    if not parts:
        raise PartitionError("empty tuple")
    m = meet_all(parts)
    return m == minimal_partition(m.n)


def serialize(p: SignedPartition) -> str:
    return json.dumps(p.to_json(), separators=(",", ":"))


def from_json(obj) -> SignedPartition:
    if not isinstance(obj, dict) or set(obj) != {"n", "zero", "pairs"}:
        raise PartitionError(f"expected object with keys n, zero, pairs: {obj!r}")
    n, zero, pairs = obj["n"], obj["zero"], obj["pairs"]
    if not isinstance(n, int) or not isinstance(zero, list) or not isinstance(pairs, list):
        raise PartitionError(f"malformed partition object: {obj!r}")
    if any(not isinstance(a, int) or a <= 0 for a in zero):
        raise PartitionError(f"zero-block must list positive integers: {zero!r}")
    if any(not isinstance(b, list) or not all(isinstance(x, int) for x in b) for b in pairs):
        raise PartitionError(f"pairs must be lists of integers: {pairs!r}")
    return make_partition(n, zero, pairs)


def parse(text: str) -> SignedPartition:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PartitionError(f"malformed partition text: {exc}") from None
    return from_json(obj)
