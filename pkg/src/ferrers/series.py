"""Exact power series truncated at a fixed order, and the counting checks built on them."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from . import oracle
from .bijections import conjugate
from .report import VerifyReport


class OrderMismatch(ValueError):
    pass


class TruncatedSeries:
    """c_0 + c_1 x + ... + c_N x^N, i.e. a power series modulo x^(N+1)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[int], order: int | None = None):
        coeffs = [int(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        coeffs = coeffs[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    def _check(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(out, n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise OrderMismatch("cannot raise the order of a truncated series")
        return TruncatedSeries(self.coeffs, order)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "TruncatedSeries":
        order = int(data["order"])
        coeffs = [int(c) for c in data["coeffs"]]
        if len(coeffs) != order + 1:
            raise ValueError(f"order {order} needs {order + 1} coefficients, got {len(coeffs)}")
        return cls(coeffs, order)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r}, order={self.order})"


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def euler_product(n: int) -> TruncatedSeries:
    """(1 - x)(1 - x^2)...(1 - x^n) mod x^(n+1)."""
    if n < 0:
        raise ValueError("order must be >= 0")
    c = [0] * (n + 1)
    c[0] = 1
    for m in range(1, n + 1):
        # multiply by (1 - x^m) in place, high exponents first
        for i in range(n, m - 1, -1):
            c[i] -= c[i - m]
    return TruncatedSeries(c, n)


def pentagonal_numbers(limit: int) -> list[tuple[int, int]]:
    """(exponent, sign) for every k(3k -/+ 1)/2 <= limit with k >= 1, in increasing order."""
    out = []
    k = 1
    while k * (3 * k - 1) // 2 <= limit:
        sign = -1 if k % 2 else 1
        for e in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if e <= limit:
                out.append((e, sign))
        k += 1
    return sorted(out)


def pentagonal_series(n: int) -> TruncatedSeries:
    if n < 0:
        raise ValueError("order must be >= 0")
    c = [0] * (n + 1)
    c[0] = 1
    for e, sign in pentagonal_numbers(n):
        c[e] = sign
    return TruncatedSeries(c, n)


@lru_cache(maxsize=None)
def _box_counts(m: int, ell: int) -> tuple[int, ...]:
    # partitions in an m x ell box: largest part < m, or largest part == m
    # and the rest fits in an m x (ell - 1) box
    if m == 0 or ell == 0:
        return (1,)
    narrower = _box_counts(m - 1, ell)
    shorter = _box_counts(m, ell - 1)
    out = [0] * (m * ell + 1)
    for i, c in enumerate(narrower):
        out[i] += c
    for i, c in enumerate(shorter):
        out[i + m] += c
    return tuple(out)


def gaussian_binomial(m: int, ell: int) -> TruncatedSeries:
    """x^n coefficient = partitions of n with at most ``ell`` parts, each at most ``m``."""
    if m < 0 or ell < 0:
        raise ValueError("box bounds must be >= 0")
    return TruncatedSeries(_box_counts(m, ell), m * ell)


def inversion_polynomial(m: int, ell: int) -> TruncatedSeries:
    """x^n coefficient = words with ``m`` ones and ``ell`` twos having n inversions.

    Computed by listing every word, so it is limited by the oracle's size guard.
    """
    c = [0] * (m * ell + 1)
    for w in oracle.enumerate_words(m, ell):
        c[oracle.brute_inversions(w)] += 1
    return TruncatedSeries(c, m * ell)


def verify_pentagonal(n: int = 100, oracle_bound: int = 40) -> VerifyReport:
    """Compare the Euler product, the pentagonal rule, and p_e - p_o.

    Every exponent up to ``n`` is one case; exponents up to ``oracle_bound``
    are also checked against the partition count.
    """
    report = VerifyReport("pentagonal", unit="coefficients")
    with report.timed():
        prod = euler_product(n)
        rule = pentagonal_series(n)
        for e in range(n + 1):
            report.cases_run += 1
            if prod[e] != rule[e]:
                report.fail({"n": e, "check": "product-vs-rule"}, rule[e], prod[e])
            if 1 <= e <= oracle_bound:
                even, odd = oracle.distinct_parity_counts(e)
                if even - odd != rule[e]:
                    report.fail({"n": e, "check": "parity-count"}, rule[e], even - odd)
    return report


def verify_euler_conjugacy(n_max: int = 25) -> VerifyReport:
    """Partitions with at most m parts vs partitions with parts at most m."""
    report = VerifyReport("conjugacy", unit="(n, m) pairs")
    with report.timed():
        for n in range(1, n_max + 1):
            for m in range(n + 1):
                report.cases_run += 1
                few = oracle.enumerate_partitions(n, oracle.PartitionConstraint(max_parts=m))
                small = oracle.enumerate_partitions(n, oracle.PartitionConstraint(max_part=m))
                if len(few) != len(small):
                    report.fail({"n": n, "m": m, "check": "count"}, len(few), len(small))
                image = {conjugate(p) for p in few}
                if len(image) != len(few) or image != set(small):
                    report.fail(
                        {"n": n, "m": m, "check": "bijection"},
                        sorted(map(list, small)),
                        sorted(map(list, image)),
                    )
    return report
