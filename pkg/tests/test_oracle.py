import itertools
from math import comb

import pytest

from ferrers import oracle
from ferrers.oracle import (
    PartitionConstraint,
    SizeGuardExceeded,
    brute_inversions,
    distinct_parity_counts,
    enumerate_partitions,
    enumerate_words,
    triangular_sum,
)


def test_max_parts_example():
    assert enumerate_partitions(5, PartitionConstraint(max_parts=2)) == [(5,), (4, 1), (3, 2)]


def test_distinct_example():
    assert enumerate_partitions(5, PartitionConstraint(distinct=True)) == [(5,), (4, 1), (3, 2)]


@pytest.mark.parametrize(
    "c", [PartitionConstraint(), PartitionConstraint(max_parts=0), PartitionConstraint(max_part=0, distinct=True)]
)
def test_zero(c):
    assert enumerate_partitions(0, c) == [()]


def test_regression_pins():
    counts = [len(enumerate_partitions(n)) for n in range(1, 11)]
    assert counts == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_order_is_lexicographically_decreasing_and_complete():
    for n in range(1, 16):
        got = enumerate_partitions(n)
        assert got == sorted(got, reverse=True)
        assert len(set(got)) == len(got)
        # completeness against compositions collapsed to sorted tuples
        brute = set()
        for cuts in itertools.product([0, 1], repeat=n - 1):
            parts, run = [], 1
            for cut in cuts:
                if cut:
                    parts.append(run)
                    run = 1
                else:
                    run += 1
            parts.append(run)
            brute.add(tuple(sorted(parts, reverse=True)))
        assert set(got) == brute


def test_constraints_revalidated():
    for n in range(0, 20):
        for c in [
            PartitionConstraint(max_parts=3),
            PartitionConstraint(max_part=4),
            PartitionConstraint(distinct=True),
            PartitionConstraint(max_parts=2, max_part=5, distinct=True),
        ]:
            got = enumerate_partitions(n, c)
            assert all(c.admits(p) for p in got)
            assert set(got) == {p for p in enumerate_partitions(n) if c.admits(p)}


def test_guards():
    with pytest.raises(SizeGuardExceeded):
        enumerate_partitions(81)
    with pytest.raises(SizeGuardExceeded):
        enumerate_words(12, 11)
    with pytest.raises(ValueError):
        PartitionConstraint(max_parts=-1)


@pytest.mark.parametrize("n, counts", [(5, (2, 1)), (1, (0, 1))])
def test_parity_counts(n, counts):
    assert distinct_parity_counts(n) == counts


def test_parity_counts_twelve():
    even, odd = distinct_parity_counts(12)
    assert even - odd == -1


def test_enumerate_words():
    assert enumerate_words(2, 1) == ["112", "121", "211"]
    assert enumerate_words(0, 0) == [""]
    assert enumerate_words(1, 1) == ["12", "21"]
    for m in range(6):
        for ell in range(6):
            words = enumerate_words(m, ell)
            assert len(words) == comb(m + ell, m) == len(set(words))
            assert all(w.count("1") == m and w.count("2") == ell for w in words)


def test_brute_inversions():
    assert brute_inversions("21") == 1
    assert brute_inversions("12") == 0
    assert brute_inversions("111211221112112122") == 24


@pytest.mark.parametrize("n, value", [(1, 1), (7, 28), (10**6, 500000500000)])
def test_triangular(n, value):
    assert triangular_sum(n) == value


def test_triangular_against_summation():
    running = 0
    for n in range(1, 10**4 + 1):
        running += n
        assert oracle.closed_form_sum(n) == running


def test_corruption_hook(monkeypatch):
    clean = distinct_parity_counts(5)
    monkeypatch.setenv(oracle.CORRUPT_ENV, "1")
    assert distinct_parity_counts(5) != clean
    assert len(enumerate_partitions(5)) == 6
    assert oracle.verify_sum(max_n=10, spot=0).failures
