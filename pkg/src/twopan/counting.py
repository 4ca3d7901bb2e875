"""Exact count t(n) of feasible weight sets via the two-span recursion.

For n in span A (the lower part of its m-range)

    t(n) = sum_{R=ceil((n-1)/3)}^{floor((2n+3^(m-2)-1)/4)} t(R)
           - sum_{R=ceil((3n+2)/5)}^{floor((2n+3^(m-2)-1)/4)} sum_{Q=ceil((R-1)/3)}^{2R-n-1} t(Q)

and for n in span B

    t(n) = sum_{R=ceil((n-1)/3)}^{(3^(m-1)-1)/2} t(R)

with t(0) = t(1) = 1.  The subtracted double sum removes (m-1)-part
prefixes whose last weight would exceed the final weight n - R.
The table is filled bottom-up; running sums over the prefix array make
each new entry O(1) big-integer additions.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence, Union

from .core import (
    RangeBounds,
    Span,
    ceil_div,
    min_parts,
    pow3,
    r_prev_range,
    span_label,
    span_of,
    spans_for,
)


class RecursionInvariantError(RuntimeError):
    """The recursion produced a negative total or asked for t(k) with k >= n."""


class MemoTable:
    """Bottom-up table of t(0..frontier-1), safe to share between threads.

    Entries are never rewritten; `computed` counts how many were produced by
    the recursion rather than seeded.
    """

    def __init__(self, seed: Optional[Sequence[int]] = None):
        values = list(seed) if seed is not None else [1, 1]
        if len(values) < 2 or values[0] != 1 or values[1] != 1:
            raise ValueError("seed must start with t(0) = 1, t(1) = 1")
        if any(v < 1 for v in values):
            raise ValueError("seed contains a non-positive count")
        self._t: list[int] = []
        self._prefix = [0]  # _prefix[k] = t(0) + ... + t(k-1)
        self._every_other = [0]  # _every_other[k] = _prefix[k] + _prefix[k-2] + ...
        self._thirds: list[int] = []  # _thirds[r] = sum_{j<=r} _prefix[(j+1)//3]
        for v in values:
            self._append(v)
        self._lock = threading.Lock()
        self.computed = 0

    def _append(self, v: int) -> None:
        n = len(self._t)
        self._t.append(v)
        p = self._prefix[-1] + v
        self._prefix.append(p)
        self._every_other.append(p + (self._every_other[n - 1] if n >= 1 else 0))
        self._thirds.append(self._prefix[(n + 1) // 3] + (self._thirds[-1] if n else 0))

    @property
    def frontier(self) -> int:
        """Smallest n not yet in the table."""
        return len(self._t)

    def values(self) -> tuple[int, ...]:
        return tuple(self._t)

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"t is defined for n >= 0, got {n}")
        if n >= len(self._t):
            self.fill(n)
        return self._t[n]

    def range_sum(self, rng: RangeBounds) -> int:
        if rng.empty:
            return 0
        return self._prefix[rng.hi + 1] - self._prefix[rng.lo]

    def fill(self, n_max: int) -> None:
        with self._lock:
            for n in range(len(self._t), n_max + 1):
                self._append(self._next(n))
                self.computed += 1

    def _next(self, n: int) -> int:
        # t(0..n-1) are present
        outer = r_prev_range(n)
        self._check_below(n, outer)
        total = self.range_sum(outer)
        if span_of(n).span is Span.A:
            total -= self._correction(n)
        if total < 0:
            raise RecursionInvariantError(f"t({n}) came out negative: {total}")
        return total

    def _correction(self, n: int) -> int:
        """Span-A double sum in O(1) from running sums.

        sum_R [P(2R - n) - P(ceil((R-1)/3))] over the R whose inner range is
        nonempty, where P is the prefix array; ceil((R-1)/3) = (R+1)//3.
        """
        rng = _outer_correction(n)
        a, b = rng.lo, rng.hi
        while a <= b and (a + 1) // 3 > 2 * a - n - 1:
            a += 1
        if a > b:
            return 0
        self._check_below(n, RangeBounds((a + 1) // 3, 2 * b - n - 1))
        lo_k = 2 * a - n - 2
        upper = self._every_other[2 * b - n] - (self._every_other[lo_k] if lo_k >= 0 else 0)
        lower = self._thirds[b] - self._thirds[a - 1]
        return upper - lower

    @staticmethod
    def _check_below(n: int, rng: RangeBounds) -> None:
        if not rng.empty and (rng.lo < 0 or rng.hi >= n):
            raise RecursionInvariantError(f"t({n}) would need t over [{rng.lo}, {rng.hi}]")


def _outer_correction(n: int) -> RangeBounds:
    m = span_of(n).m
    return RangeBounds(ceil_div(3 * n + 2, 5), (2 * n + pow3(m - 2) - 1) // 4)


def _inner_correction(n: int, R: int) -> RangeBounds:
    return RangeBounds(ceil_div(R - 1, 3), 2 * R - n - 1)


def _correction_ranges(n: int):
    for R in _outer_correction(n):
        yield R, _inner_correction(n, R)


_DEFAULT = MemoTable()


def default_table() -> MemoTable:
    return _DEFAULT


def t(n: int, memo: Optional[MemoTable] = None) -> int:
    """Number of minimum-size weight sets for n (t(0) = 1)."""
    return (memo or _DEFAULT)[n]


@dataclass(frozen=True)
class CorrectionTerm:
    n: int
    outer: RangeBounds
    inner: tuple[tuple[int, RangeBounds, int], ...]  # (R, Q-range, sum of t over it)
    total: int


def correction_term(n: int, memo: Optional[MemoTable] = None) -> CorrectionTerm:
    """The span-A double sum, expanded for inspection."""
    sc = span_of(n)
    if sc.span is not Span.A:
        raise ValueError(f"n = {n} is in span {sc.span.value}; correction applies to span A only")
    memo = memo or _DEFAULT
    if n > 0:
        memo.fill(n - 1)
    inner = tuple((R, q, memo.range_sum(q)) for R, q in _correction_ranges(n))
    return CorrectionTerm(n, _outer_correction(n), inner, sum(s for _, _, s in inner))


@dataclass(frozen=True)
class TableRow:
    n: int
    m: Optional[int]
    span: Optional[Span]
    count: int

    @property
    def span_text(self) -> str:
        return self.span.value if self.span else "-"


def row(n: int, memo: Optional[MemoTable] = None) -> TableRow:
    m = min_parts(n) if n >= 1 else None
    return TableRow(n, m, span_label(n), t(n, memo))


def table(n_max: int, memo: Optional[MemoTable] = None) -> list[TableRow]:
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    memo = memo or _DEFAULT
    memo.fill(n_max)
    return [row(n, memo) for n in range(1, n_max + 1)]


# --- A005704 triplicates ---------------------------------------------------


class BFileError(ValueError):
    pass


class ReferenceTooShortError(ValueError):
    def __init__(self, have: int, need: int):
        super().__init__(f"reference sequence has {have} terms; at least {need} are required")
        self.need = need


@dataclass(frozen=True)
class BFile:
    first_index: int
    values: tuple[int, ...]


def parse_bfile(text: str) -> BFile:
    """Parse OEIS b-file text: "index value" lines, '#' comments, contiguous indices."""
    idx: list[int] = []
    vals: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            i, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(f"line {lineno}: non-integer field in {raw!r}") from None
        if idx and i != idx[-1] + 1:
            raise BFileError(f"line {lineno}: index {i} does not follow {idx[-1]}")
        idx.append(i)
        vals.append(v)
    if not vals:
        raise BFileError("b-file has no terms")
    return BFile(idx[0], tuple(vals))


def load_bfile(path: Union[str, Path, None] = None) -> BFile:
    """Load a b-file; with no path, the bundled A005704 terms."""
    if path is None:
        text = resources.files("twopan").joinpath("data/b005704.txt").read_text()
    else:
        text = Path(path).read_text()
    return parse_bfile(text)


@dataclass(frozen=True)
class TriplicateRow:
    n: int
    count: int
    group_index: int
    consistent: bool


@dataclass(frozen=True)
class TriplicateGroup:
    index: int
    ns: tuple[int, ...]
    counts: tuple[int, ...]
    reference: Optional[int]

    @property
    def complete(self) -> bool:
        return len(self.ns) == 3

    @property
    def consistent(self) -> bool:
        return len(set(self.counts)) == 1

    @property
    def matches(self) -> bool:
        return self.consistent and self.reference == self.counts[0]


@dataclass(frozen=True)
class TriplicateReport:
    m: int
    groups: tuple[TriplicateGroup, ...]
    offset: Optional[int]  # OEIS index paired with group 0, None if no alignment fits
    first_index: int

    @property
    def rows(self) -> list[TriplicateRow]:
        return [
            TriplicateRow(n, c, g.index, g.consistent)
            for g in self.groups
            for n, c in zip(g.ns, g.counts)
        ]

    @property
    def complete_groups(self) -> list[TriplicateGroup]:
        return [g for g in self.groups if g.complete]

    @property
    def ok(self) -> bool:
        full = self.complete_groups
        return self.offset is not None and all(g.matches for g in full)


def triplicate_report(
    m: int, reference: Union[BFile, Sequence[int]], memo: Optional[MemoTable] = None
) -> TriplicateReport:
    """Walk span B of m downward in groups of three and line the groups up with `reference`.

    The alignment offset is searched for, not assumed: it is the first
    position at which every complete, equal-valued group matches
    consecutive reference terms.
    """
    if m < 3:
        raise ValueError(f"m must be >= 3, got {m}")
    if isinstance(reference, BFile):
        first, ref = reference.first_index, reference.values
    else:
        first, ref = 0, tuple(reference)
    span_b = spans_for(m)[1]
    ns = list(range(span_b.n_hi, span_b.n_lo - 1, -1))
    chunks = [tuple(ns[i : i + 3]) for i in range(0, len(ns), 3)]
    if len(ref) < len(chunks):
        raise ReferenceTooShortError(len(ref), len(chunks))
    memo = memo or _DEFAULT
    memo.fill(span_b.n_hi)
    counts = [tuple(memo[n] for n in c) for c in chunks]

    def fits(k: int) -> bool:
        for g, v in enumerate(counts):
            if len(v) == 3 and (len(set(v)) != 1 or v[0] != ref[k + g]):
                return False
        return True

    offset = next((k for k in range(len(ref) - len(chunks) + 1) if fits(k)), None)
    groups = tuple(
        TriplicateGroup(g, c, v, None if offset is None else ref[offset + g])
        for g, (c, v) in enumerate(zip(chunks, counts))
    )
    return TriplicateReport(m, groups, None if offset is None else first + offset, first)
