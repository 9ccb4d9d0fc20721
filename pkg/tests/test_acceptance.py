"""Exit criteria. Each test records one PASS/FAIL line in the terminal summary."""

import time


from ferrers import oracle
from ferrers.bijections import (
    BoxedPartition,
    conjugate,
    conjugate_formula,
    count_inversions,
    lattice_path,
    path_decode,
    path_encode,
)
from ferrers.cli import main
from ferrers.hex import board_shapes, verify_no_draw
from ferrers.oracle import PartitionConstraint, enumerate_partitions
from ferrers.series import (
    euler_product,
    gaussian_binomial,
    inversion_polynomial,
    pentagonal_series,
)
from ferrers.verify import verify_franklin

TIME_LIMIT = 60.0


def test_1_pentagonal_three_way(record_criterion):
    t0 = time.perf_counter()
    prod, rule = euler_product(100), pentagonal_series(100)
    bad = [n for n in range(101) if prod[n] != rule[n]]
    for n in range(1, 41):
        even, odd = oracle.distinct_parity_counts(n)
        if even - odd != rule[n]:
            bad.append(n)
    elapsed = time.perf_counter() - t0
    ok = not bad and len(prod) == 101 and elapsed < TIME_LIMIT
    record_criterion("1 pentagonal theorem, 101 coefficients + p_e-p_o for n<=40", ok, f"{elapsed:.2f}s")
    assert not bad
    assert elapsed < TIME_LIMIT


def test_2_franklin_involution(record_criterion):
    report = verify_franklin(50)
    ok = report.ok and report.elapsed < TIME_LIMIT
    record_criterion(
        "2 Franklin involution and exceptional census, n<=50", ok,
        f"{report.cases_run} partitions, {report.elapsed:.2f}s",
    )
    assert report.failures == []
    assert report.elapsed < TIME_LIMIT


def test_3_conjugation(record_criterion):
    t0 = time.perf_counter()
    failures = []
    for n in range(1, 26):
        everything = enumerate_partitions(n)
        for p in everything:
            q = conjugate(p)
            if conjugate(q) != p or conjugate_formula(p) != q or q.weight != n:
                failures.append(("conjugate", p))
        for m in range(0, n + 1):
            few = {p for p in everything if len(p) <= m}
            small = {p for p in everything if not p or p[0] <= m}
            if len(few) != len(small) or {conjugate(p) for p in few} != small:
                failures.append(("exchange", n, m))
            if len(few) != len(enumerate_partitions(n, PartitionConstraint(max_parts=m))):
                failures.append(("count", n, m))
    elapsed = time.perf_counter() - t0
    record_criterion("3 conjugation involution, formula agreement, constraint exchange, n<=25",
                     not failures and elapsed < TIME_LIMIT, f"{elapsed:.2f}s")
    assert failures == []
    assert elapsed < TIME_LIMIT


def test_4_boxed_partitions_and_words(record_criterion):
    t0 = time.perf_counter()
    failures = []
    for m in range(13):
        for ell in range(13 - m):
            inv = {}
            for w in oracle.enumerate_words(m, ell):
                inv.setdefault(oracle.brute_inversions(w), set()).add(w)
            for n in range(m * ell + 1):
                lams = enumerate_partitions(n, PartitionConstraint(max_parts=ell, max_part=m))
                words = []
                for lam in lams:
                    bp = BoxedPartition(m, ell, lam)
                    w = path_encode(bp)
                    words.append(w)
                    if count_inversions(w) != n or path_decode(w, m, ell) != bp:
                        failures.append((m, ell, lam))
                if len(set(words)) != len(words) or set(words) != inv.get(n, set()):
                    failures.append((m, ell, n, "not a bijection"))
            if gaussian_binomial(m, ell) != inversion_polynomial(m, ell):
                failures.append((m, ell, "q-binomial"))
    elapsed = time.perf_counter() - t0
    record_criterion("4 boxed partition <-> inversion word bijection, m+l<=12",
                     not failures and elapsed < TIME_LIMIT, f"{elapsed:.2f}s")
    assert failures == []
    assert elapsed < TIME_LIMIT


def test_5_word_path_agreement(record_criterion):
    t0 = time.perf_counter()
    failures = []
    checked = 0
    for m in range(13):
        for ell in range(13 - m):
            for n in range(m * ell + 1):
                for lam in enumerate_partitions(n, PartitionConstraint(max_parts=ell, max_part=m)):
                    bp = BoxedPartition(m, ell, lam)
                    checked += 1
                    if lattice_path(bp).as_word() != path_encode(bp):
                        failures.append((m, ell, lam))
    elapsed = time.perf_counter() - t0
    record_criterion("5 lattice path read as word equals the explicit word",
                     not failures and elapsed < TIME_LIMIT, f"{checked} boxed partitions")
    assert failures == []
    assert elapsed < TIME_LIMIT


def test_6_sum_identity(record_criterion):
    t0 = time.perf_counter()
    report = oracle.verify_sum(10**4, spot=10**6)
    big = oracle.triangular_sum(10**6)
    elapsed = time.perf_counter() - t0
    ok = report.ok and big == 500000500000 and elapsed < TIME_LIMIT
    record_criterion("6 closed form vs iterated sum n<=10^4, and n=10^6", ok, f"{elapsed:.2f}s")
    assert report.failures == []
    assert big == 500000500000
    assert elapsed < TIME_LIMIT


def test_7_hex_no_draw(record_criterion):
    t0 = time.perf_counter()
    exhaustive = [verify_no_draw(n, m) for n, m in board_shapes(16)]
    assert any(r.subject == "hex 4x4" and r.cases_run == 65536 for r in exhaustive)
    sampled = verify_no_draw(11, 11, exhaustive=False, samples=10_000, seed=0)
    elapsed = time.perf_counter() - t0
    failures = [f for r in exhaustive for f in r.failures] + sampled.failures
    boards = sum(r.cases_run for r in exhaustive)
    ok = not failures and sampled.cases_run == 10_000 and elapsed < TIME_LIMIT
    record_criterion(
        "7 Hex no-draw: all boards with n*m<=16 plus 10^4 random 11x11",
        ok, f"{boards} + {sampled.cases_run} boards, {elapsed:.2f}s",
    )
    assert failures == []
    assert elapsed < TIME_LIMIT


VERIFY_SUBCOMMANDS = ["pentagonal", "conjugacy", "inversion-bijection", "franklin", "sum", "hex"]


def test_8_cli_end_to_end(record_criterion, monkeypatch, capsys):
    clean = {s: main(["verify", s]) for s in VERIFY_SUBCOMMANDS}
    capsys.readouterr()
    monkeypatch.setenv(oracle.CORRUPT_ENV, "1")
    corrupt = {s: main(["verify", s]) for s in VERIFY_SUBCOMMANDS}
    capsys.readouterr()
    ok = all(c == 0 for c in clean.values()) and all(c == 1 for c in corrupt.values())
    record_criterion("8 CLI verify exits 0 clean, 1 with a corrupted oracle", ok,
                     f"clean={clean} corrupt={corrupt}")
    assert clean == {s: 0 for s in VERIFY_SUBCOMMANDS}
    assert corrupt == {s: 1 for s in VERIFY_SUBCOMMANDS}
