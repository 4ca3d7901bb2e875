import pytest
from hypothesis import given, settings, strategies as st

from twopan.core import RangeBounds, Span, r_prev_range, span_of
from twopan.counting import (
    BFileError,
    MemoTable,
    ReferenceTooShortError,
    RecursionInvariantError,
    correction_term,
    load_bfile,
    parse_bfile,
    t,
    table,
    triplicate_report,
)
from twopan.oracle import count_feasible

from test_oracle import T_1_TO_40


def test_base_cases():
    assert t(0) == 1
    assert t(1) == 1


def test_small_values_against_golden():
    assert [t(n) for n in range(1, 41)] == T_1_TO_40


@pytest.mark.parametrize("n,expected", [(5, 2), (13, 1), (16, 12)])
def test_examples(n, expected):
    assert t(n) == expected


def test_oracle_sweep_to_250():
    for n in range(1, 251):
        assert t(n) == count_feasible(n), n


def test_correction_term_examples():
    c = correction_term(5)
    assert c.outer.empty and c.total == 0

    c = correction_term(16)
    assert c.outer == RangeBounds(10, 10)
    assert c.inner == ((10, RangeBounds(3, 3), t(3)),)
    assert c.total == t(3)


def test_correction_term_rejects_span_b():
    with pytest.raises(ValueError, match="span B"):
        correction_term(26)


def test_fast_correction_matches_expanded_sum():
    memo = MemoTable()
    memo.fill(4000)
    for n in range(2, 4000):
        if span_of(n).span is Span.A:
            assert memo._correction(n) == correction_term(n, memo).total, n


def test_correction_matches_formula_difference():
    memo = MemoTable()
    for n in (14, 16, 20, 41, 50, 122, 150):
        c = correction_term(n, memo)
        assert memo[n] == memo.range_sum(r_prev_range(n)) - c.total


def test_table_examples():
    rows = table(4)
    assert [(r.n, r.m, r.span, r.count) for r in rows] == [
        (1, 1, None, 1),
        (2, 2, Span.A, 1),
        (3, 2, Span.A, 1),
        (4, 2, Span.B, 1),
    ]
    last = table(13)[-1]
    assert (last.n, last.m, last.span, last.count) == (13, 3, Span.B, 1)
    assert [(r.n, r.m, r.span_text, r.count) for r in table(1)] == [(1, 1, "-", 1)]


def test_positive_and_big():
    memo = MemoTable()
    memo.fill(30000)
    assert min(memo.values()) >= 1
    # first n needing 11 weights
    assert memo[29525] > 2**53


def test_memo_idempotence():
    big = MemoTable()
    big.fill(2000)
    fresh = MemoTable()
    for k in (7, 100, 999, 1500):
        assert big[k] == MemoTable()[k] == fresh[k]


def test_seeded_table_skips_work():
    a = MemoTable()
    a.fill(300)
    b = MemoTable(a.values())
    assert b[300] == a[300]
    assert b.computed == 0


def test_seed_validation():
    with pytest.raises(ValueError):
        MemoTable([1, 2])
    with pytest.raises(ValueError):
        MemoTable([1, 1, 0])


def test_negative_total_is_internal_error():
    # a table whose seeded entries make the subtraction exceed the main sum
    seed = [1] * 14
    seed[3] = 10**6
    with pytest.raises(RecursionInvariantError):
        MemoTable(seed)[16]


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 5000))
def test_memo_matches_fresh(n):
    assert t(n) == MemoTable()[n]


def test_triplicates_m3():
    rep = triplicate_report(3, load_bfile())
    assert [g.ns for g in rep.groups] == [(13, 12, 11), (10, 9)]
    assert rep.groups[0].consistent and rep.groups[0].complete
    assert not rep.groups[1].complete
    assert rep.offset == 0
    assert rep.ok
    assert [(r.n, r.count, r.group_index) for r in rep.rows][:3] == [(13, 1, 0), (12, 1, 0), (11, 1, 0)]


def test_triplicates_m4_span():
    rep = triplicate_report(4, load_bfile())
    ns = [n for g in rep.groups for n in g.ns]
    assert ns == list(range(40, 23, -1))
    assert rep.ok


def test_triplicate_errors():
    with pytest.raises(ReferenceTooShortError, match="2"):
        triplicate_report(3, [])
    with pytest.raises(ValueError):
        triplicate_report(2, [1, 2, 3])


def test_triplicate_alignment_is_discovered():
    ref = load_bfile().values
    rep = triplicate_report(4, [7, 7] + list(ref))
    assert rep.offset == 2
    rep = triplicate_report(4, [5] * 50)
    assert rep.offset is None and not rep.ok


def test_bfile_parsing():
    b = parse_bfile("# comment\n3 10\n4 11  # trailing\n\n5 12\n")
    assert (b.first_index, b.values) == (3, (10, 11, 12))
    with pytest.raises(BFileError):
        parse_bfile("1 2\n3 4\n")
    with pytest.raises(BFileError):
        parse_bfile("1 x\n")
    with pytest.raises(BFileError):
        parse_bfile("# nothing\n")


def test_bundled_bfile_against_direct_count():
    # partitions of 3k into powers of 3, counted by brute recursion
    from functools import lru_cache

    @lru_cache(None)
    def parts(s, largest):
        if s == 0:
            return 1
        total, p = 0, 1
        while p <= min(s, largest):
            total += parts(s - p, p)
            p *= 3
        return total

    b = load_bfile()
    assert b.first_index == 0
    assert list(b.values[:60]) == [parts(3 * k, 3 * k) for k in range(60)]


def test_concurrent_fill_matches_single_writer():
    from concurrent.futures import ThreadPoolExecutor

    reference = MemoTable()
    reference.fill(5000)
    shared = MemoTable()
    targets = list(range(5000, 0, -97))
    with ThreadPoolExecutor(8) as pool:
        got = list(pool.map(lambda n: shared[n], targets))
    assert got == [reference[n] for n in targets]
    assert shared.values() == reference.values()[: shared.frontier]
