"""Partitions, Ferrers diagrams and their text/JSON forms."""

from __future__ import annotations

import enum
import json
from typing import Iterable


class PartitionError(ValueError):
    """Base class for invalid partition input."""


class OrderViolation(PartitionError):
    pass


class NonPositivePart(PartitionError):
    pass


class EmptyPartition(PartitionError):
    pass


class NotDistinct(PartitionError):
    pass


class ParseError(ValueError):
    pass


class Partition(tuple):
    """A nonincreasing tuple of positive integers.

    Instances compare equal to plain tuples with the same parts, so
    ``Partition((3, 1)) == (3, 1)`` holds.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for i, x in enumerate(parts):
            if isinstance(x, bool) or not isinstance(x, int):
                raise PartitionError(f"part {i} is not an integer: {x!r}")
            if x <= 0:
                raise NonPositivePart(f"part {i} is {x}, parts must be >= 1")
        for i in range(len(parts) - 1):
            if parts[i] < parts[i + 1]:
                raise OrderViolation(
                    f"parts {i} and {i + 1} increase: {parts[i]} < {parts[i + 1]}"
                )
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def is_distinct(self) -> bool:
        return all(self[i] > self[i + 1] for i in range(len(self) - 1))

    def cells(self) -> list[tuple[int, int]]:
        """Diagram cells as (row, column), both 0-based."""
        return [(i, j) for i, part in enumerate(self) for j in range(part)]

    def to_text(self) -> str:
        return ",".join(map(str, self))

    def to_json(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({tuple(self)!r})"


class DistinctPartition(Partition):
    """Nonempty partition with strictly decreasing parts."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        if not self:
            raise EmptyPartition("a distinct-part partition must be nonempty")
        if not self.is_distinct():
            raise NotDistinct(f"repeated part in {tuple(self)}")
        return self


class RenderMode(enum.Enum):
    LEFT = "left"
    CENTERED = "centered"


DOT = "*"


def make_partition(parts: Iterable[int]) -> Partition:
    return Partition(parts)


def make_distinct(parts: Iterable[int]) -> DistinctPartition:
    return DistinctPartition(parts)


def render_ferrers(p: Partition, mode: RenderMode = RenderMode.LEFT) -> str:
    """Draw the dot diagram of ``p``.

    Centered rows use two-character cells, so shifting a row by half a
    dot is one space.
    """
    mode = RenderMode(mode)
    if not p:
        return ""
    if mode is RenderMode.LEFT:
        return "\n".join(DOT * part for part in p)
    top = p[0]
    rows = [(" " * (top - part) + (DOT + " ") * part).rstrip() for part in p]
    return "\n".join(rows)


def _as_distinct(p: Partition) -> DistinctPartition:
    if isinstance(p, DistinctPartition):
        return p
    if not p:
        raise EmptyPartition("base and slope need a nonempty diagram")
    return DistinctPartition(p)


def base_length(p: Partition) -> int:
    """Length of the bottom row (the smallest part)."""
    p = _as_distinct(p)
    return p[-1]


def slope_length(p: Partition) -> int:
    """Number of dots on the diagonal run down-left from the top-right dot."""
    p = _as_distinct(p)
    s = 1
    while s < len(p) and p[s] == p[0] - s:
        s += 1
    return s


def parse_partition(text: str) -> Partition:
    """Parse ``"8,6,6,3,1"``; surrounding ``[]`` or ``()`` are allowed."""
    s = text.strip()
    if s and s[0] in "[(":
        closing = "]" if s[0] == "[" else ")"
        if not s.endswith(closing):
            raise ParseError(f"unbalanced brackets in {text!r}")
        s = s[1:-1].strip()
    if not s:
        return Partition(())
    parts = []
    for field in s.split(","):
        field = field.strip()
        try:
            parts.append(int(field))
        except ValueError:
            raise ParseError(f"not an integer: {field!r}") from None
    return make_partition(parts)


def partition_from_json(data) -> Partition:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from None
    if not isinstance(data, list):
        raise ParseError("partition JSON must be an array of integers")
    return make_partition(data)
