"""Weight sets for a two-pan balance: data types, reachability and closed-form bounds.

A load k is weighable by weights w_1..w_m when k = sum(u_i * w_i) for signs
u_i in {-1, 0, +1}: +1 puts a weight opposite the goods, -1 next to them.
All arithmetic here is exact integer arithmetic.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional


class SpanError(ValueError):
    """n has no span classification (n < 2); use the n = 1 shortcut."""


class SumMismatchError(ValueError):
    pass


class NotMinimalError(ValueError):
    """Partition sums to n but does not have min_parts(n) parts."""


def pow3(k: int) -> int:
    return 3**k


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@dataclass(frozen=True)
class Partition:
    weights: tuple[int, ...]

    def __init__(self, weights: Iterable[int]):
        ws = tuple(int(w) for w in weights)
        if not ws:
            raise ValueError("partition needs at least one weight")
        if any(w < 1 for w in ws):
            raise ValueError(f"weights must be positive: {ws}")
        if any(a > b for a, b in zip(ws, ws[1:])):
            raise ValueError(f"weights must be nondecreasing: {ws}")
        object.__setattr__(self, "weights", ws)

    @property
    def n(self) -> int:
        return sum(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self) -> Iterator[int]:
        return iter(self.weights)

    def __str__(self) -> str:
        return " ".join(map(str, self.weights))

    def prefix_sums(self) -> "PrefixSums":
        return PrefixSums.of(self.weights)


@dataclass(frozen=True)
class PrefixSums:
    """R_0 .. R_m with R_0 = 0 and R_i = R_{i-1} + w_i."""

    values: tuple[int, ...]

    @classmethod
    def of(cls, weights: Iterable[int]) -> "PrefixSums":
        acc = [0]
        for w in weights:
            acc.append(acc[-1] + w)
        return cls(tuple(acc))

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def total(self) -> int:
        return self.values[-1]


class Span(enum.Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class SpanClass:
    m: int
    span: Span
    n_lo: int
    n_hi: int

    def __contains__(self, n: int) -> bool:
        return self.n_lo <= n <= self.n_hi


@dataclass(frozen=True)
class RangeBounds:
    """Inclusive integer range; empty when lo > hi."""

    lo: int
    hi: int

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def __contains__(self, x: int) -> bool:
        return self.lo <= x <= self.hi


def min_parts(n: int) -> int:
    """Smallest m with 2n <= 3**m - 1, i.e. ceil(log3(2n)) without floats."""
    if n < 1:
        raise ValueError(f"min_parts needs n >= 1, got {n}")
    m, p = 0, 1
    while p - 1 < 2 * n:
        m += 1
        p *= 3
    return m


def part_range(m: int) -> tuple[int, int]:
    """All n needing exactly m weights: [(3^(m-1)+1)/2, (3^m-1)/2]."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return (pow3(m - 1) + 1) // 2, (pow3(m) - 1) // 2


def spans_for(m: int) -> tuple[SpanClass, SpanClass]:
    if m < 2:
        raise SpanError("spans are defined for m >= 2 only")
    lo, hi = part_range(m)
    mid = lo + pow3(m - 2)
    return SpanClass(m, Span.A, lo, mid), SpanClass(m, Span.B, mid + 1, hi)


def span_of(n: int) -> SpanClass:
    if n < 2:
        raise SpanError(f"n = {n} has no span; n = 1 is the single partition (1)")
    a, b = spans_for(min_parts(n))
    return a if n in a else b


def span_label(n: int) -> Optional[Span]:
    """Span of n, or None for n = 0 and n = 1."""
    return None if n < 2 else span_of(n).span


def _reach_mask(weights: Iterable[int], n: int) -> int:
    # bit (n + v) set <=> v reachable; band limited to [-n, n]
    band = (1 << (2 * n + 1)) - 1
    s = 1 << n
    for w in weights:
        s = (s | (s << w) | (s >> w)) & band
    return s


def _covers(weights: Iterable[int], n: int) -> bool:
    full = (1 << n) - 1
    return (_reach_mask(weights, n) >> (n + 1)) & full == full


def reachable_loads(p: Partition) -> frozenset[int]:
    """Every positive load weighable in one weighing with the weights of p."""
    n = p.n
    s = _reach_mask(p.weights, n) >> (n + 1)
    return frozenset(k + 1 for k in range(n) if (s >> k) & 1)


def is_feasible(p: Partition, n: int) -> bool:
    if p.n != n:
        raise SumMismatchError(f"weights {p} sum to {p.n}, not {n}")
    m = min_parts(n)
    if len(p) != m:
        raise NotMinimalError(f"{p} has {len(p)} parts; n = {n} needs exactly {m}")
    return _covers(p.weights, n)


def bounds_violation(p: Partition) -> Optional[str]:
    """Describe the first failed necessary condition, or None if all hold."""
    ws = p.weights
    if ws[0] != 1:
        return f"w_1 = {ws[0]} != 1"
    r = 0
    for i, w in enumerate(ws, start=1):
        if i > 1 and w > 2 * r + 1:
            return f"w_{i} = {w} > 2*R_{i - 1} + 1 = {2 * r + 1}"
        r += w
    return None


def bounds_ok(p: Partition) -> bool:
    return bounds_violation(p) is None


def prefix_inequality_violations(p: Partition) -> list[str]:
    """All failures of the prefix-sum/weight inequalities implied by w_i <= 2R_{i-1} + 1.

    Checked for 2 <= i <= m, in integer form (fractions cleared).
    """
    out = []
    R = p.prefix_sums()
    for i in range(2, len(p) + 1):
        w, r, rp = p.weights[i - 1], R[i], R[i - 1]
        checks = (
            ("R_{i-1} >= (w_i - 1)/2", 2 * rp >= w - 1),
            ("R_i >= (3w_i - 1)/2", 2 * r >= 3 * w - 1),
            ("w_i <= (2R_i + 1)/3", 3 * w <= 2 * r + 1),
            ("R_i <= 3R_{i-1} + 1", r <= 3 * rp + 1),
            ("R_{i-1} >= (R_i - 1)/3", 3 * rp >= r - 1),
        )
        out += [f"i={i}: {name}" for name, ok in checks if not ok]
    return out


def cap_violations(p: Partition) -> list[str]:
    """Failures of w_i <= 3^(i-1) and R_i <= (3^i - 1)/2."""
    out = []
    R = p.prefix_sums()
    for i, w in enumerate(p.weights, start=1):
        if w > pow3(i - 1):
            out.append(f"w_{i} = {w} > 3^{i - 1}")
        if 2 * R[i] > pow3(i) - 1:
            out.append(f"R_{i} = {R[i]} > (3^{i} - 1)/2")
    return out


def r_prev_range(n: int) -> RangeBounds:
    """Inclusive range of the prefix sum before the last weight, R_{m-1}."""
    sc = span_of(n)
    lo = ceil_div(n - 1, 3)
    if sc.span is Span.A:
        return RangeBounds(lo, (2 * n + pow3(sc.m - 2) - 1) // 4)
    return RangeBounds(lo, (pow3(sc.m - 1) - 1) // 2)


def ternary_weights(m: int) -> Partition:
    """1, 3, 9, ..., 3^(m-1): the extremal set for n = (3^m - 1)/2."""
    return Partition(pow3(i) for i in range(m))
