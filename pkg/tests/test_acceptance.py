"""Exit criteria for the package; each test prints a PASS/FAIL line in the summary."""
import csv
import io
import time

import pytest

from twopan.cli import main
from twopan.core import Partition, bounds_violation, prefix_inequality_violations, min_parts, r_prev_range
from twopan.counting import t
from twopan.oracle import enumerate_feasible, enumerate_unpruned, min_parts_bruteforce


def _cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.criterion("1  verify 1 500 exits 0 (recursion == brute force, exact), under 120 s")
def test_oracle_equivalence_sweep(capsys):
    start = time.perf_counter()
    code, out, err = _cli(capsys, "--format", "csv", "verify", "1", "500")
    elapsed = time.perf_counter() - start
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0, err
    assert [int(r["n"]) for r in rows] == list(range(1, 501))
    assert all(r["match"] == "ok" and r["recursion"] == r["oracle"] for r in rows)
    assert elapsed < 120, f"verify took {elapsed:.1f} s"


@pytest.mark.criterion("2  r_prev_range(16) = [5, 10], r_prev_range(26) = [9, 13]")
def test_worked_examples():
    assert (r_prev_range(16).lo, r_prev_range(16).hi) == (5, 10)
    assert (r_prev_range(26).lo, r_prev_range(26).hi) == (9, 13)


@pytest.mark.criterion("3  (3^m-1)/2 has the single partition 1, 3, ..., 3^(m-1) for m = 1..8")
def test_ternary_extremal():
    for m in range(1, 9):
        n = (3**m - 1) // 2
        assert enumerate_feasible(n).tuples() == [tuple(3**i for i in range(m))]
        assert t(n) == 1


def _ceil_log3_of_2n(n):
    # smallest m with 3^m >= 2n; 2n is even so it never equals a power of 3
    m = 0
    while 3**m < 2 * n:
        m += 1
    return m


@pytest.mark.criterion("4  brute-force minimum part count = ceil(log3(2n)) for n <= 40")
def test_minimality():
    for n in range(1, 41):
        assert min_parts_bruteforce(n) == _ceil_log3_of_2n(n) == min_parts(n), n
    assert [min_parts_bruteforce(n) for n in (4, 5, 13, 14)] == [2, 3, 3, 4]


@pytest.mark.criterion("5  no feasible partition with n <= 200 breaks w_1 = 1, w_i <= 2R_{i-1}+1 or the derived prefix-sum inequalities")
def test_necessary_conditions():
    checked = 0
    for n in range(1, 201):
        for p in enumerate_feasible(n).partitions:
            assert bounds_violation(p) is None, (n, p)
            assert prefix_inequality_violations(p) == [], (n, p)
            checked += 1
    assert checked == sum(t(n) for n in range(1, 201))


@pytest.mark.criterion("6  span-B triplicates for m = 3..7 match bundled A005704 under one offset")
def test_triplicates(capsys):
    offsets = set()
    for m in range(3, 8):
        code, out, err = _cli(capsys, "--format", "csv", "oeis", str(m))
        assert code == 0, err
        rows = list(csv.DictReader(io.StringIO(out)))
        groups = {}
        for r in rows:
            groups.setdefault(int(r["group"]), []).append(r)
        for g, members in groups.items():
            if len(members) == 3:
                assert len({r["t"] for r in members}) == 1, (m, g)
                assert all(r["t"] == r["oeis_value"] for r in members), (m, g)
        offsets |= {int(r["oeis_index"]) - int(r["group"]) for r in rows}
    assert len(offsets) == 1


@pytest.mark.criterion("7  pruned and unpruned enumerators agree for n <= 60")
def test_pruning_soundness():
    for n in range(1, 61):
        assert enumerate_feasible(n).tuples() == enumerate_unpruned(n, min_parts(n)).tuples(), n


@pytest.mark.criterion("8  table 300 is byte-identical across runs; cached rerun computes nothing")
def test_table_determinism_and_cache(capsys, tmp_path):
    cache = tmp_path / "t.cache"
    _, plain, _ = _cli(capsys, "table", "300")
    _, first, err1 = _cli(capsys, "--cache", str(cache), "--stats", "table", "300")
    cached = cache.read_bytes()
    _, second, err2 = _cli(capsys, "--cache", str(cache), "--stats", "table", "300")
    assert plain == first == second
    assert cache.read_bytes() == cached
    assert "computed=299" in err1
    assert "loaded_frontier=301 computed=0" in err2
