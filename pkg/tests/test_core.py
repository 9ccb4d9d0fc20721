import pytest
from hypothesis import given

from ferrers.core import (
    DistinctPartition,
    EmptyPartition,
    NonPositivePart,
    NotDistinct,
    OrderViolation,
    ParseError,
    Partition,
    RenderMode,
    base_length,
    make_partition,
    parse_partition,
    partition_from_json,
    render_ferrers,
    slope_length,
)
from ferrers.oracle import enumerate_partitions

from conftest import partitions


def all_partitions(limit):
    for n in range(limit + 1):
        yield from enumerate_partitions(n)


class TestMakePartition:
    def test_example_from_ferrers_figure(self):
        p = make_partition((8, 6, 6, 3, 1))
        assert p.weight == 24
        assert p == (8, 6, 6, 3, 1)

    def test_empty(self):
        assert make_partition(()).weight == 0

    def test_increasing_pair(self):
        with pytest.raises(OrderViolation):
            make_partition((3, 5))

    @pytest.mark.parametrize("parts", [(3, 0), (-1,), (2, 2, -4)])
    def test_non_positive(self, parts):
        with pytest.raises(NonPositivePart):
            make_partition(parts)

    def test_immutable(self):
        p = make_partition((2, 1))
        with pytest.raises(TypeError):
            p[0] = 5

    def test_distinct(self):
        assert DistinctPartition((5, 3, 1)) == (5, 3, 1)
        with pytest.raises(NotDistinct):
            DistinctPartition((3, 3))
        with pytest.raises(EmptyPartition):
            DistinctPartition(())


class TestRender:
    def test_left_aligned(self):
        text = render_ferrers(make_partition((8, 6, 6, 3, 1)), RenderMode.LEFT)
        assert [len(row) for row in text.split("\n")] == [8, 6, 6, 3, 1]
        assert set(text.replace("\n", "")) == {"*"}

    def test_empty(self):
        assert render_ferrers(Partition(()), RenderMode.LEFT) == ""
        assert render_ferrers(Partition(()), RenderMode.CENTERED) == ""

    def test_centered_half_dot_offset(self):
        rows = render_ferrers(make_partition((2, 1)), RenderMode.CENTERED).split("\n")
        assert rows == ["* *", " *"]
        # one space is half of the two-character dot cell
        assert rows[1].index("*") - rows[0].index("*") == 1

    def test_mode_accepts_string(self):
        assert render_ferrers(make_partition((1,)), "centered") == "*"

    @given(partitions())
    def test_left_aligned_counts(self, p):
        text = render_ferrers(p, RenderMode.LEFT)
        lines = text.split("\n") if text else []
        assert len(lines) == len(p)
        assert text.count("*") == p.weight

    @given(partitions())
    def test_centered_rows_symmetric_about_top_row(self, p):
        text = render_ferrers(p, RenderMode.CENTERED)
        if not p:
            return
        rows = text.split("\n")
        top_mid = (len(rows[0]) - 1) / 2
        for row, part in zip(rows, p):
            assert row.count("*") == part
            first, last = row.index("*"), row.rindex("*")
            assert (first + last) / 2 == top_mid


class TestBaseSlope:
    @pytest.mark.parametrize(
        "parts, base, slope",
        [((8, 7, 6, 3, 2), 2, 3), ((1,), 1, 1), ((6, 4, 3, 1), 1, 1), ((5,), 5, 1), ((6, 5, 4, 3), 3, 4)],
    )
    def test_examples(self, parts, base, slope):
        assert base_length(make_partition(parts)) == base
        assert slope_length(make_partition(parts)) == slope

    def test_empty(self):
        with pytest.raises(EmptyPartition):
            base_length(Partition(()))
        with pytest.raises(EmptyPartition):
            slope_length(Partition(()))

    def test_slope_is_maximal_run(self):
        for n in range(1, 31):
            for p in enumerate_partitions(n):
                if not p.is_distinct():
                    continue
                s = slope_length(p)
                assert 1 <= s <= len(p)
                assert all(p[j] == p[0] - j for j in range(s))
                assert s == len(p) or p[s] != p[0] - s


def test_distinct_predicate_matches_pairwise_check():
    for p in all_partitions(30):
        pairwise = all(p[i] != p[j] for i in range(len(p)) for j in range(i + 1, len(p)))
        assert p.is_distinct() == pairwise


class TestParse:
    def test_example(self):
        assert parse_partition("8,6,6,3,1") == (8, 6, 6, 3, 1)

    @pytest.mark.parametrize("text", ["", "  ", "[]", "()"])
    def test_empty(self, text):
        assert parse_partition(text) == ()

    @pytest.mark.parametrize("text", ["2,a", "3,,1", "[3,1", "1.5"])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_partition(text)

    def test_brackets_and_spaces(self):
        assert parse_partition("[8, 6, 6, 3, 1]") == (8, 6, 6, 3, 1)

    def test_validation_errors_propagate(self):
        with pytest.raises(OrderViolation):
            parse_partition("1,2")

    def test_round_trip_all_small(self):
        for p in all_partitions(30):
            assert parse_partition(p.to_text()) == p

    def test_json(self):
        assert partition_from_json("[8,6,6,3,1]") == (8, 6, 6, 3, 1)
        with pytest.raises(ParseError):
            partition_from_json('{"a": 1}')
