"""The enumeration oracle must be self-consistent before anything else
is allowed to lean on it: its counters, generators and bucketing
helpers are cross-checked against each other here, plus hard limits."""

import pytest

from partita import (
    ORACLE_LIMIT,
    OracleLimitError,
    count_partitions,
    count_with_greatest_part,
    distinct_length_counts,
    iter_partitions,
    partition_length_counts,
)


def test_known_totals():
    assert count_partitions(0) == 1
    assert count_partitions(1) == 1
    assert count_partitions(5) == 7
    assert count_partitions(6) == 11
    assert count_partitions(10) == 42
    assert count_partitions(20) == 627


def test_known_distinct_totals():
    # 1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10 for n = 0..10
    assert [count_partitions(n, distinct=True) for n in range(11)] == [
        1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10,
    ]


def test_known_exact_part_counts():
    assert count_partitions(5, 2) == 2
    assert count_partitions(7, 4) == 3
    assert count_partitions(0, 0) == 1
    assert count_partitions(0, 1) == 0
    assert count_partitions(3, 7) == 0
    assert count_partitions(6, 3, distinct=True) == 1
    assert count_partitions(4, 3, distinct=True) == 0


def test_iter_yields_nonincreasing_unique_partitions():
    for n in range(13):
        seen = set(iter_partitions(n))
        assert len(seen) == count_partitions(n)
        for part in seen:
            assert sum(part) == n
            assert all(a >= b for a, b in zip(part, part[1:]))
            assert all(p >= 1 for p in part)


def test_iter_zero():
    assert list(iter_partitions(0)) == [()]
    assert list(iter_partitions(0, distinct=True)) == [()]
    assert list(iter_partitions(0, 0)) == [()]
    assert list(iter_partitions(0, 1)) == []


def test_iter_exact_m_matches_counts():
    for n in range(13):
        for m in range(n + 2):
            plain = list(iter_partitions(n, m))
            assert len(plain) == count_partitions(n, m)
            assert all(len(part) == m for part in plain)
            strict = list(iter_partitions(n, m, distinct=True))
            assert len(strict) == count_partitions(n, m, distinct=True)
            for part in strict:
                assert all(a > b for a, b in zip(part, part[1:]))


def test_iter_distinct_matches_counts():
    for n in range(16):
        parts = list(iter_partitions(n, distinct=True))
        assert len(parts) == len(set(parts)) == count_partitions(n, distinct=True)
        for part in parts:
            assert all(a > b for a, b in zip(part, part[1:]))


def test_length_counts_match_bucketed_enumeration():
    for n in range(18):
        counts = partition_length_counts(n)
        assert len(counts) == n + 1
        buckets = [0] * (n + 1)
        for part in iter_partitions(n):
            buckets[len(part)] += 1
        assert counts == buckets
        assert sum(counts) == count_partitions(n)


def test_distinct_length_counts_match_bucketed_enumeration():
    for n in range(18):
        counts = distinct_length_counts(n)
        buckets = [0] * (n + 1)
        for part in iter_partitions(n, distinct=True):
            buckets[len(part)] += 1
        assert counts == buckets
        assert sum(counts) == count_partitions(n, distinct=True)


def test_length_counts_zero():
    assert partition_length_counts(0) == [1]
    assert distinct_length_counts(0) == [1]


def test_greatest_part_conjugation():
    # partitions with greatest part k are conjugate to those with k parts
    for n in range(22):
        for k in range(n + 2):
            assert count_with_greatest_part(n, k) == count_partitions(n, k)


def test_limit_enforced():
    count_partitions(ORACLE_LIMIT, 2)  # at the limit is fine
    with pytest.raises(OracleLimitError):
        count_partitions(ORACLE_LIMIT + 1)
    with pytest.raises(OracleLimitError):
        list(iter_partitions(ORACLE_LIMIT + 1))
    with pytest.raises(OracleLimitError):
        partition_length_counts(ORACLE_LIMIT + 1)
    with pytest.raises(OracleLimitError):
        distinct_length_counts(ORACLE_LIMIT + 1)
    with pytest.raises(OracleLimitError):
        count_with_greatest_part(ORACLE_LIMIT + 1, 3)


def test_limit_error_is_value_error():
    assert issubclass(OracleLimitError, ValueError)


def test_input_validation():
    with pytest.raises(ValueError):
        count_partitions(-1)
    with pytest.raises(ValueError):
        count_partitions(2.0)
    with pytest.raises(ValueError):
        count_partitions(True)
    with pytest.raises(ValueError):
        count_partitions(5, -2)
    with pytest.raises(ValueError):
        list(iter_partitions(5, 1.5))
