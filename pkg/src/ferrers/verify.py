"""Verification sweeps that tie the bijections to the oracles and series."""

from __future__ import annotations

from . import oracle
from .bijections import (
    BoxedPartition,
    Exceptional,
    Moved,
    count_inversions,
    franklin_apply,
    lattice_path,
    path_decode,
    path_encode,
)
from .core import Partition
from .hex import verify_hex
from .oracle import PartitionConstraint, verify_sum
from .report import VerifyReport
from .series import (
    gaussian_binomial,
    inversion_polynomial,
    pentagonal_series,
    verify_euler_conjugacy,
    verify_pentagonal,
)


def expected_exceptionals(n: int) -> list[tuple[Partition, int]]:
    """The staircases Franklin's moves cannot touch, with their signs."""
    out = []
    k = 1
    while k * (3 * k - 1) // 2 <= n:
        sign = -1 if k % 2 else 1
        if n == k * (3 * k - 1) // 2:
            out.append((Partition(range(2 * k - 1, k - 1, -1)), sign))
        if n == k * (3 * k + 1) // 2:
            out.append((Partition(range(2 * k, k, -1)), sign))
        k += 1
    return out


def verify_franklin(max_n: int = 50) -> VerifyReport:
    report = VerifyReport("franklin", unit="partitions")
    with report.timed():
        for n in range(1, max_n + 1):
            parts = oracle.enumerate_partitions(n, PartitionConstraint(distinct=True))
            members = set(parts)
            found = []
            for p in parts:
                report.cases_run += 1
                out = franklin_apply(p)
                if isinstance(out, Exceptional):
                    found.append((p, out.sign))
                    if out.k != len(p) or out.sign != (-1) ** len(p):
                        report.fail(list(p), {"k": len(p), "sign": (-1) ** len(p)}, out.to_json())
                    continue
                q = out.result
                back = franklin_apply(q)
                problems = []
                if q.weight != n:
                    problems.append("weight")
                if abs(len(q) - len(p)) != 1:
                    problems.append("parity")
                if q not in members:
                    problems.append("image not among distinct partitions")
                if not (isinstance(back, Moved) and back.result == p and back.move != out.move):
                    problems.append("not an involution")
                if problems:
                    report.fail(list(p), "involution", {"image": list(q), "problems": problems})
            want = expected_exceptionals(n)
            if sorted(found) != sorted(want):
                report.fail(
                    {"n": n, "check": "exceptional census"},
                    [[list(p), s] for p, s in want],
                    [[list(p), s] for p, s in found],
                )
            even, odd = oracle.distinct_parity_counts(n)
            rule = pentagonal_series(n)[n]
            if even - odd != rule or sum(s for _, s in found) != rule:
                report.fail({"n": n, "check": "p_e - p_o"}, rule, even - odd)
    return report


def verify_inversion_bijection(max_size: int = 12) -> VerifyReport:
    """Boxed partitions vs words with m ones and ell twos, for every box with m + ell <= max_size."""
    report = VerifyReport("inversion-bijection", unit="boxed partitions")
    with report.timed():
        for m in range(max_size + 1):
            for ell in range(max_size + 1 - m):
                by_inversions: dict[int, set] = {}
                for w in oracle.enumerate_words(m, ell):
                    by_inversions.setdefault(oracle.brute_inversions(w), set()).add(w)
                box = {"m": m, "ell": ell}
                for n in range(m * ell + 1):
                    lams = oracle.enumerate_partitions(
                        n, PartitionConstraint(max_parts=ell, max_part=m)
                    )
                    words = []
                    for lam in lams:
                        report.cases_run += 1
                        bp = BoxedPartition(m, ell, lam)
                        w = path_encode(bp)
                        words.append(w)
                        if count_inversions(w) != n:
                            report.fail({**box, "partition": list(lam)}, n, count_inversions(w))
                        if path_decode(w, m, ell) != bp:
                            report.fail({**box, "partition": list(lam)}, "decode(encode) = id", w)
                        walked = lattice_path(bp).as_word()
                        if walked != w:
                            report.fail({**box, "partition": list(lam)}, str(w), str(walked))
                    image = set(words)
                    if len(image) != len(words) or image != by_inversions.get(n, set()):
                        report.fail(
                            {**box, "n": n, "check": "bijection"},
                            sorted(by_inversions.get(n, set())),
                            sorted(image),
                        )
                gb, ip = gaussian_binomial(m, ell), inversion_polynomial(m, ell)
                if gb != ip:
                    report.fail({**box, "check": "q-binomial"}, list(gb.coeffs), list(ip.coeffs))
    return report


SUBJECTS = {
    "pentagonal": verify_pentagonal,
    "conjugacy": verify_euler_conjugacy,
    "inversion-bijection": verify_inversion_bijection,
    "franklin": verify_franklin,
    "sum": verify_sum,
    "hex": verify_hex,
}


def verify_all() -> list[VerifyReport]:
    return [fn() for fn in SUBJECTS.values()]
