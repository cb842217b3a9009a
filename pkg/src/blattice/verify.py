"""Formula-versus-oracle verification grid."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import analytic, exact, identities
from .enumeration import enumerate_a, enumerate_b, enumerate_b_no_zero
from .oracle import oracle_count_tuples, oracle_meet_closure_check, oracle_partner_table
from .partitions import shape_of

GRIDS = {"tiny": 2, "default": 3}


@dataclass
class Row:
    name: str
    expected: object
    got: object

    @property
    def passed(self) -> bool:
        return self.expected == self.got

    def as_dict(self) -> dict:
        return {"check": self.name, "expected": self.expected, "got": self.got,
                "passed": self.passed}


def _per_partition_rows(n: int) -> list[Row]:
    # a row fails with the first offending partition, if any
    rows = []
    bad_b = bad_d = bad_a = None
    count_b = count_d = 0
    for p in enumerate_b(n):
        shape = shape_of(p)
        table = oracle_partner_table(p)
        if shape.k:
            formula = {l: exact.nb_pi_l(shape, l) for l in range(n + 1)}
        else:
            # all of π is the zero-block; only 0̂^B (n pairs) splits it
            formula = {l: int(l == n) for l in range(n + 1)}
        oracle = {l: table.get(l, 0) for l in range(n + 1)}
        count_b += 1
        if formula != oracle and bad_b is None:
            bad_b = (str(p), oracle, formula)
        if not p.has_zero_block:
            count_d += 1
            tab_d = oracle_partner_table(p, no_zero=True)
            f_d = {l: exact.nd_pi_l(shape, l) for l in range(n + 1)}
            o_d = {l: tab_d.get(l, 0) for l in range(n + 1)}
            if f_d != o_d and bad_d is None:
                bad_d = (str(p), o_d, f_d)
    for p in enumerate_a(n):
        want = sum(oracle_partner_table(p, universe="A").values())
        got = exact.na_pi([len(b) for b in p.pairs])
        if want != got and bad_a is None:
            bad_a = (str(p), want, got)
    for label, bad in ((f"nb_pi_l all {count_b} pi n={n}", bad_b),
                       (f"nd_pi_l all {count_d} pi n={n}", bad_d),
                       (f"na_pi all pi n={n}", bad_a)):
        rows.append(Row(label, "match", "match" if bad is None else f"mismatch at {bad}"))
    return rows


def _numeric_checks(nmax: int, budget: int | None) -> list[tuple[str, Callable, Callable]]:
    checks: list[tuple[str, Callable, Callable]] = []
    for n in range(nmax + 1):
        checks += [
            (f"|Pi^B_{n}|", lambda n=n: exact.dowling_number(n),
             lambda n=n: sum(1 for _ in enumerate_b(n))),
            (f"N_{n} no zero-block", lambda n=n: exact.n_no_zero(n),
             lambda n=n: sum(1 for _ in enumerate_b_no_zero(n))),
            (f"Bell B_{n}", lambda n=n: exact.bell_number(n),
             lambda n=n: sum(1 for _ in enumerate_a(n))),
        ]
        for r in (1, 2, 3):
            oracle_b = lambda n=n, r=r: oracle_count_tuples(n, r, "B", budget=budget)
            if r == 2:
                checks.append((f"N^B_{n},2 exact", lambda n=n: exact.n2b_exact(n), oracle_b))
            checks += [
                (f"N^B_{n},{r} series", lambda n=n, r=r: analytic.nbr_series(n, r).recovered_integer,
                 oracle_b),
                (f"N^D_{n},{r} exact", lambda n=n, r=r: exact.nd_r_exact(n, r),
                 lambda n=n, r=r: oracle_count_tuples(n, r, "no_zero", budget=budget)),
                (f"N_{n},{r} exact", lambda n=n, r=r: exact.na_r_exact(n, r),
                 lambda n=n, r=r: oracle_count_tuples(n, r, "A", budget=budget)),
            ]
    return checks


def run_verification(grid: str = "default", budget: int | None = None,
                     mutate: int | None = None) -> list[Row]:
    """Run the grid; ``mutate`` perturbs one seeded formula value by +1."""
    if grid not in GRIDS:
        raise ValueError(f"unknown grid {grid!r}; expected one of {sorted(GRIDS)}")
    nmax = GRIDS[grid]
    checks = _numeric_checks(nmax, budget)
    victim = random.Random(mutate).randrange(len(checks)) if mutate is not None else None
    rows = []
    for i, (name, formula, oracle) in enumerate(checks):
        got = formula()
        if i == victim:
            got = (got or 0) + 1
        rows.append(Row(name, oracle(), got))
    for n in range(nmax + 1):
        rows += _per_partition_rows(n)
        rep = oracle_meet_closure_check(n)
        rows.append(Row(f"meet lattice axioms n={n}", 0, len(rep.violations)))
    rows += identity_rows()
    return rows


def identity_rows() -> list[Row]:
    reports = []
    for r in (2, 3):
        reports += [identities.check_canfield_a(r), identities.check_canfield_d(r)]
    reports.append(identities.check_wilf_consistency(4))
    reports += [identities.check_half_e_identity(l) for l in range(6)]
    reports += [identities.check_bell_polynomial_identity(n, x)
                for n in range(9) for x in (Fraction(1, 2), 1, 2)]
    return [Row(rep.name, "PASS", "PASS" if rep.passed else "FAIL") for rep in reports]
