"""Minimum-size weight sets that weigh every load 1..n on a two-pan balance."""
from .core import (
    NotMinimalError,
    Partition,
    PrefixSums,
    RangeBounds,
    Span,
    SpanClass,
    SpanError,
    SumMismatchError,
    bounds_ok,
    bounds_violation,
    is_feasible,
    min_parts,
    r_prev_range,
    reachable_loads,
    span_of,
)
from .counting import MemoTable, correction_term, t, table, triplicate_report
from .oracle import (
    EnumerationResult,
    count_feasible,
    enumerate_feasible,
    enumerate_unpruned,
    min_parts_bruteforce,
)

__version__ = "0.1.0"
