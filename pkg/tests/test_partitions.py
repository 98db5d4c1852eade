import pytest

from pentaverify.errors import CapExceeded, TableTooSmall
from pentaverify.partitions import (
    Family,
    Mode,
    build_overp_table,
    build_p_table,
    build_pod_table,
    enumerate_partitions,
)
from pentaverify import qseries as qs


def test_p_table_small_values(p_table):
    # p(0..10), each value equal to the brute-force count below
    assert list(p_table.values[:11]) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert p_table.value(5) == 7
    assert p_table.value(10) == 42


def test_trivial_tables():
    assert build_p_table(0).values == (1,)
    assert build_overp_table(0).values == (1,)
    assert build_pod_table(0).values == (1,)


def test_overp_small_values(overp_table):
    # {1}, {1-bar}; then 2, 2-bar, 1+1, 1-bar+1
    assert overp_table.value(1) == 2
    assert overp_table.value(2) == 4


def test_pod_small_values(pod_table):
    # 3, 2+1 (1+1+1 repeats an odd part); 4, 3+1, 2+2
    assert pod_table.value(3) == 2
    assert pod_table.value(4) == 3
    assert pod_table.value(2) == 1


def test_negative_index_is_zero(p_table):
    assert p_table.value(-1) == 0
    assert p_table.value(-100) == 0


def test_table_too_small(p_table):
    with pytest.raises(TableTooSmall):
        p_table.value(601)


def test_basic_invariants(p_table, overp_table, pod_table):
    for table in (p_table, overp_table, pod_table):
        assert table.values[0] == 1
        assert all(v >= 0 for v in table.values)
        # nondecreasing from n = 1 on
        assert all(a <= b for a, b in zip(table.values[1:], table.values[2:]))


def test_overpartition_counts_even(overp_table):
    # toggling the overline on the largest part is an involution
    assert all(v % 2 == 0 for v in overp_table.values[1:])


@pytest.mark.parametrize("mode,builder", [
    (Mode.PLAIN, build_p_table),
    (Mode.OVER, build_overp_table),
    (Mode.POD, build_pod_table),
])
def test_enumeration_counts_match_tables(mode, builder):
    table = builder(14)
    for n in range(15):
        assert sum(1 for _ in enumerate_partitions(n, mode)) == table.value(n)


def test_enumeration_counts_medium(p_table, overp_table, pod_table):
    assert sum(1 for _ in enumerate_partitions(22, Mode.PLAIN)) == p_table.value(22)
    assert sum(1 for _ in enumerate_partitions(18, Mode.OVER)) == overp_table.value(18)
    assert sum(1 for _ in enumerate_partitions(22, Mode.POD)) == pod_table.value(22)


def test_enumeration_counts_at_caps(p_table, overp_table, pod_table):
    assert sum(1 for _ in enumerate_partitions(45, Mode.PLAIN)) == p_table.value(45)
    assert sum(1 for _ in enumerate_partitions(30, Mode.OVER)) == overp_table.value(30)
    assert sum(1 for _ in enumerate_partitions(40, Mode.POD)) == pod_table.value(40)


def test_partition_shape_invariants():
    for pt in enumerate_partitions(9, Mode.OVER):
        assert sum(pt.parts) == 9
        assert all(a >= b for a, b in zip(pt.parts, pt.parts[1:]))
        assert pt.overlined <= set(pt.parts)
    seen = set()
    for pt in enumerate_partitions(8, Mode.OVER):
        key = (pt.parts, tuple(sorted(pt.overlined)))
        assert key not in seen
        seen.add(key)


def test_pod_enumeration_rejects_repeated_odds():
    for pt in enumerate_partitions(15, Mode.POD):
        odds = [p for p in pt.parts if p % 2]
        assert len(odds) == len(set(odds))


def test_enumeration_n0_single_empty():
    for mode in Mode:
        items = list(enumerate_partitions(0, mode))
        assert len(items) == 1
        assert items[0].parts == ()


def test_enumeration_caps():
    with pytest.raises(CapExceeded):
        next(enumerate_partitions(46, Mode.PLAIN))
    with pytest.raises(CapExceeded):
        next(enumerate_partitions(31, Mode.OVER))
    with pytest.raises(CapExceeded):
        next(enumerate_partitions(41, Mode.POD))
    with pytest.raises(ValueError):
        next(enumerate_partitions(-1, Mode.PLAIN))


def test_tables_match_series_quotients(p_table, overp_table, pod_table):
    # independent route: explicit product/inverse arithmetic in qseries
    assert list(qs.partition_series(200).coeffs) == list(p_table.values[:201])
    assert list(qs.overpartition_series(200).coeffs) == list(overp_table.values[:201])
    assert list(qs.pod_series(200).coeffs) == list(pod_table.values[:201])


def test_rows_export(p_table):
    rows = list(build_p_table(3).rows())
    assert rows == [(0, 1), (1, 1), (2, 2), (3, 3)]
    assert p_table.family is Family.P
