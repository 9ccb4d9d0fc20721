"""Brute-force enumerators used to check the cleverer constructions.

Nothing here calls into :mod:`ferrers.bijections` or :mod:`ferrers.series`.

Setting the environment variable ``FERRERS_CORRUPT_ORACLE`` to a nonempty
value makes every oracle return deliberately wrong answers. It exists only
so tests can confirm that the verification sweeps really fail loudly.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Optional

from .core import Partition
from .report import VerifyReport

MAX_PARTITION_N = 80
MAX_WORD_LENGTH = 22
SUM_CHECK_BOUND = 10**6

CORRUPT_ENV = "FERRERS_CORRUPT_ORACLE"


class SizeGuardExceeded(ValueError):
    pass


def corrupted() -> bool:
    return bool(os.environ.get(CORRUPT_ENV))


@dataclass(frozen=True)
class PartitionConstraint:
    max_parts: Optional[int] = None
    max_part: Optional[int] = None
    distinct: bool = False

    def __post_init__(self):
        for name in ("max_parts", "max_part"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise ValueError(f"{name} must be >= 0, got {v}")

    def admits(self, parts) -> bool:
        if self.max_parts is not None and len(parts) > self.max_parts:
            return False
        if self.max_part is not None and parts and parts[0] > self.max_part:
            return False
        if self.distinct and any(a == b for a, b in zip(parts, parts[1:])):
            return False
        return True


UNCONSTRAINED = PartitionConstraint()


def _gen(n: int, largest: int, slots: Optional[int], distinct: bool) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    if slots == 0:
        return
    rest = None if slots is None else slots - 1
    for first in range(min(n, largest), 0, -1):
        nxt = first - 1 if distinct else first
        for tail in _gen(n - first, nxt, rest, distinct):
            yield (first,) + tail


def enumerate_partitions(n: int, c: PartitionConstraint = UNCONSTRAINED) -> list[Partition]:
    """All partitions of ``n`` meeting ``c``, largest first in lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > MAX_PARTITION_N:
        raise SizeGuardExceeded(f"partition enumeration refuses n > {MAX_PARTITION_N}")
    largest = n if c.max_part is None else c.max_part
    out = [Partition(t) for t in _gen(n, largest, c.max_parts, c.distinct)]
    if corrupted() and out:
        out.pop()
    return out


def distinct_parity_counts(n: int) -> tuple[int, int]:
    """(even, odd): distinct-part partitions of ``n`` split by number of parts."""
    even = odd = 0
    for p in _gen(n, n, None, True):
        if len(p) % 2:
            odd += 1
        else:
            even += 1
    if corrupted():
        odd += 1
    return even, odd


def enumerate_words(m: int, ell: int) -> list[str]:
    """Every word with ``m`` ones and ``ell`` twos, in increasing lexicographic order."""
    if m < 0 or ell < 0:
        raise ValueError("symbol counts must be >= 0")
    if m + ell > MAX_WORD_LENGTH:
        raise SizeGuardExceeded(f"word enumeration refuses length > {MAX_WORD_LENGTH}")
    out: list[str] = []

    def walk(prefix: str, ones: int, twos: int) -> None:
        if not ones and not twos:
            out.append(prefix)
            return
        if ones:
            walk(prefix + "1", ones - 1, twos)
        if twos:
            walk(prefix + "2", ones, twos - 1)

    walk("", m, ell)
    if corrupted() and len(out) > 1:
        out.pop()
    return out


def brute_inversions(word: str) -> int:
    """Count pairs i < j with word[i] == '2' and word[j] == '1', pair by pair."""
    n = len(word)
    return sum(
        1 for i in range(n) for j in range(i + 1, n) if word[i] == "2" and word[j] == "1"
    )


def iterated_sums(n: int) -> Iterator[int]:
    """Running totals 1, 1+2, ..., 1+...+n by repeated addition."""
    total = 1 if corrupted() else 0
    for i in range(1, n + 1):
        total += i
        yield total


def iterated_sum(n: int) -> int:
    total = 0
    for total in iterated_sums(n):
        pass
    return total


def closed_form_sum(n: int) -> int:
    return (n * n + n) // 2


def triangular_sum(n: int) -> int:
    """1 + 2 + ... + n from the closed form n^2/2 + n/2.

    For ``n <= SUM_CHECK_BOUND`` the result is also checked against plain
    summation.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    closed = closed_form_sum(n)
    if n <= SUM_CHECK_BOUND and not corrupted():
        assert closed == iterated_sum(n), n
    return closed


def verify_sum(max_n: int = 10**4, spot: int = 10**6) -> VerifyReport:
    report = VerifyReport("sum", unit="values")
    with report.timed():
        for n, running in enumerate(iterated_sums(max_n), start=1):
            report.cases_run += 1
            closed = closed_form_sum(n)
            if closed != running:
                report.fail(n, running, closed)
        if spot:
            report.cases_run += 1
            got = closed_form_sum(spot)
            want = iterated_sum(spot)
            if got != want:
                report.fail(spot, want, got)
    return report
