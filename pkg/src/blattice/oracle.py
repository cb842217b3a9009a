"""Ground-truth counts by exhaustive meet computation.

Nothing in this module uses a counting formula: every number comes from
enumerating partitions and comparing meets with 0̂^B.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from .config import BoundExceeded, get_settings
from .enumeration import enumerate_b, enumerate_universe
from .partitions import (SignedPartition, maximal_partition, meet, meet_labels,
                         minimal_partition, refines)

TUPLE_METHODS = ("naive", "early_exit", "meet_table")


def _check_oracle_n(n: int, max_n: int | None) -> None:
    bound = get_settings().oracle_max_n if max_n is None else max_n
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the oracle bound {bound}")


def oracle_partner_table(pi: SignedPartition, *, no_zero: bool = False,
                         universe: str | None = None, max_n: int | None = None) -> Counter:
    """Minimal partners of ``pi`` tallied by their number of block pairs."""
    _check_oracle_n(pi.n, max_n)
    universe = universe or ("no_zero" if no_zero else "B")
    if no_zero and universe == "B":
        universe = "no_zero"
    bottom = minimal_partition(pi.n)
    counts: Counter = Counter()
    for q in enumerate_universe(pi.n, universe, max_n=max(pi.n, 0)):
        if meet(pi, q) == bottom:
            counts[q.num_pairs] += 1
    return counts


def oracle_count_partners(pi: SignedPartition, *, pairs: int | None = None,
                          no_zero: bool = False, universe: str | None = None,
                          max_n: int | None = None) -> int:
    """Number of ``π'`` with ``meet(π, π') = 0̂^B``.

    ``pairs`` restricts to partners with exactly that many block pairs,
    ``no_zero`` to zero-block-free partners; ``universe="A"`` ranges over
    ordinary partitions instead.
    """
    table = oracle_partner_table(pi, no_zero=no_zero, universe=universe, max_n=max_n)
    if pairs is None:
        return sum(table.values())
    return table.get(pairs, 0)


class MeetTable:
    """All meets within a meet-closed universe, by index."""

    def __init__(self, parts: list[SignedPartition]):
        self.parts = parts
        index = {p: i for i, p in enumerate(parts)}
        labels = [p.labels for p in parts]
        n = parts[0].n
        size = len(parts)
        table = [[0] * size for _ in range(size)]
        for i in range(size):
            li = labels[i]
            row = table[i]
            for j in range(i, size):
                m = index[meet_labels(n, li, labels[j])]
                row[j] = m
                table[j][i] = m
        self.table = table
        self.bottom = index[minimal_partition(n)]


def _work(size: int, r: int, method: str) -> int:
    if method == "meet_table":
        return size * (size + 1) // 2 + size * size * max(r - 2, 0)
    return size ** r


def oracle_count_tuples(n: int, r: int, universe: str = "B", *, method: str = "meet_table",
                        budget: int | None = None) -> int:
    """Number of ``r``-tuples from the universe whose iterated meet is 0̂^B.

    ``naive`` checks every tuple; ``early_exit`` stops at the first prefix
    whose meet is already minimal and counts its completions in bulk;
    ``meet_table`` propagates the distribution of prefix meets.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if method not in TUPLE_METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {TUPLE_METHODS}")
    parts = list(enumerate_universe(n, universe, max_n=max(n, 0)))
    size = len(parts)
    budget = get_settings().tuple_budget if budget is None else budget
    work = _work(size, r, method)
    if work > budget:
        raise BoundExceeded(f"{method} count for n={n}, r={r} needs ~{work} meets, budget {budget}")
    bottom = minimal_partition(n)

    if method == "naive":
        total = 0
        for tup in product(parts, repeat=r):
            m = tup[0]
            for q in tup[1:]:
                m = meet(m, q)
            total += m == bottom
        return total

    if method == "early_exit":
        def count(prefix: SignedPartition, remaining: int) -> int:
            if prefix == bottom:
                return size ** remaining
            if remaining == 0:
                return 0
            return sum(count(meet(prefix, q), remaining - 1) for q in parts)
        return sum(count(p, r - 1) for p in parts)

    if r == 1:
        return sum(p == bottom for p in parts)
    mt = MeetTable(parts)
    dist = Counter(range(size))
    for _ in range(r - 1):
        nxt: Counter = Counter()
        for i, c in dist.items():
            row = mt.table[i]
            for m in row:
                nxt[m] += c
        dist = nxt
    return dist.get(mt.bottom, 0)


@dataclass
class ClosureReport:
    n: int
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def oracle_meet_closure_check(n: int, max_n: int = 3) -> ClosureReport:
    """Check the lattice axioms of meet over all of Π_n^B."""
    if n > max_n:
        raise BoundExceeded(f"closure check limited to n <= {max_n}")
    parts = list(enumerate_b(n))
    rep = ClosureReport(n)
    bottom, top = minimal_partition(n), maximal_partition(n)
    mt = MeetTable(parts)
    index = {p: i for i, p in enumerate(parts)}
    le = [[refines(p, q) for q in parts] for p in parts]

    def bad(msg):
        if len(rep.violations) < 50:
            rep.violations.append(msg)

    for i, p in enumerate(parts):
        if mt.table[i][i] != i:
            bad(f"not idempotent at {p}")
        if parts[mt.table[i][index[bottom]]] != bottom:
            bad(f"meet with 0̂^B differs from 0̂^B at {p}")
        if parts[mt.table[i][index[top]]] != p:
            bad(f"meet with 1̂^B differs from p at {p}")
        for j, q in enumerate(parts):
            m = mt.table[i][j]
            rep.checked += 1
            mp = parts[m]
            if meet(q, p) != mp:
                bad(f"not commutative at {p}, {q}")
            if not (le[m][i] and le[m][j]):
                bad(f"meet {mp} does not refine both {p} and {q}")
            for k in range(len(parts)):
                if le[k][i] and le[k][j] and not le[k][m]:
                    bad(f"{parts[k]} refines {p} and {q} but not their meet")
                if mt.table[m][k] != mt.table[i][mt.table[j][k]]:
                    bad(f"not associative at {p}, {q}, {parts[k]}")
            pz, qz = set(p.zero), set(q.zero)
            if set(mp.zero) != pz & qz:
                bad(f"zero-block of meet is not the intersection at {p}, {q}")
    return rep
