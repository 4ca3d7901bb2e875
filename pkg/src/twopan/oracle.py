"""Brute-force enumeration of feasible weight sets.

This is the ground truth the counting recursion is checked against, so it
never consults the recursion.  Search pruning uses only necessary conditions
(w_1 = 1, w_i <= 2R_{i-1} + 1, and the prefix-growth cap R_i <= 3R_{i-1} + 1);
every emitted tuple is re-checked by signed-sum reachability.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .core import Partition, _covers, bounds_ok, min_parts, pow3

UNPRUNED_CAP = 60


class OracleCapError(ValueError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"n = {n} exceeds the brute-force cap of {cap}")
        self.n = n
        self.cap = cap


@dataclass
class EnumerationResult:
    n: int
    m: int
    partitions: list[Partition] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.partitions)

    def tuples(self) -> list[tuple[int, ...]]:
        return [p.weights for p in self.partitions]


def _weight_range(d: int, m: int, n: int, rp: int, last: int) -> range:
    k = m - d + 1
    if d == m:
        w = n - rp
        return range(w, w + 1) if last <= w <= 2 * rp + 1 else range(0)
    g = pow3(k - 1)
    need = -((-(n - (g - 1) // 2)) // g) - rp
    return range(max(last, need), min(2 * rp + 1, (n - rp) // k) + 1)


def _pruned_tuples(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """Nondecreasing m-tuples summing to n that survive the bound pruning, in lex order."""
    stack: list[int] = []

    def rec(d: int, rp: int, last: int) -> Iterator[tuple[int, ...]]:
        for w in _weight_range(d, m, n, rp, last):
            stack.append(w)
            if d == m:
                yield tuple(stack)
            else:
                yield from rec(d + 1, rp + w, w)
            stack.pop()

    yield from rec(1, 0, 1)


def iter_feasible(n: int) -> Iterator[Partition]:
    """Feasible partitions of n in lexicographic order, generated lazily."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    for ws in _pruned_tuples(n, min_parts(n)):
        if _covers(ws, n):
            yield Partition(ws)


def enumerate_feasible(n: int) -> EnumerationResult:
    return EnumerationResult(n, min_parts(n), list(iter_feasible(n)))


def count_feasible(n: int) -> int:
    """Same search as enumerate_feasible, counted by the compiled kernel."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    from ._kernel import count_feasible_kernel

    return int(count_feasible_kernel(n, min_parts(n)))


def _all_partitions(n: int, parts: int, least: int = 1) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        if n >= least:
            yield (n,)
        return
    for w in range(least, n // parts + 1):
        for rest in _all_partitions(n - w, parts - 1, w):
            yield (w,) + rest


def enumerate_unpruned(n: int, parts: int, cap: int = UNPRUNED_CAP) -> EnumerationResult:
    """Every nondecreasing `parts`-part partition of n that weighs 1..n; no pruning."""
    if n > cap:
        raise OracleCapError(n, cap)
    if n < 1 or parts < 1:
        raise ValueError(f"need n >= 1 and parts >= 1, got n={n}, parts={parts}")
    found = [Partition(ws) for ws in _all_partitions(n, parts) if _covers(ws, n)]
    return EnumerationResult(n, parts, found)


def min_parts_bruteforce(n: int, cap: int = UNPRUNED_CAP) -> int:
    if n > cap:
        raise OracleCapError(n, cap)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    k = 1
    while not enumerate_unpruned(n, k, cap).partitions:
        k += 1
    return k


@dataclass
class SufficiencyRow:
    n: int
    bounds_ok: int
    feasible: int

    @property
    def gap(self) -> int:
        return self.bounds_ok - self.feasible


def bounds_sufficiency_report(n_max: int = 200) -> list[SufficiencyRow]:
    """Compare tuples passing the bound checks with tuples that are actually feasible.

    Reported, never asserted: it is an experiment on whether the necessary
    conditions are also sufficient.
    """
    rows = []
    for n in range(1, n_max + 1):
        m = min_parts(n)
        ok = feas = 0
        for ws in _all_partitions_bounded(n, m):
            if bounds_ok(Partition(ws)):
                ok += 1
                feas += _covers(ws, n)
        rows.append(SufficiencyRow(n, ok, feas))
    return rows


def _all_partitions_bounded(n: int, m: int) -> Iterator[tuple[int, ...]]:
    # only w_i <= 2R_{i-1} + 1 and the sum constraint, no growth-cap pruning
    def rec(d, rp, last, acc):
        k = m - d + 1
        if d == m:
            w = n - rp
            if w >= last:
                yield acc + (w,)
            return
        for w in range(last, min(2 * rp + 1, (n - rp) // k) + 1):
            yield from rec(d + 1, rp + w, w, acc + (w,))

    yield from rec(1, 0, 1, ())
