"""Conjugation, the box/word correspondence, and Franklin's involution."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .core import (
    DistinctPartition,
    Partition,
    PartitionError,
    ParseError,
    base_length,
    slope_length,
)

# --- conjugation -------------------------------------------------------------


def conjugate(p: Partition) -> Partition:
    """Reflect the diagram of ``p`` in its main diagonal and read the rows."""
    reflected = {(j, i) for i, j in Partition(p).cells()}
    rows: dict[int, int] = {}
    for i, _ in reflected:
        rows[i] = rows.get(i, 0) + 1
    return Partition(rows[i] for i in range(len(rows)))


def conjugate_formula(p: Partition) -> Partition:
    """Part i of the result counts the parts of ``p`` that are >= i."""
    p = Partition(p)
    if not p:
        return p
    return Partition(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


# --- boxes, words, paths ----------------------------------------------------


class BoxViolation(PartitionError):
    pass


class SymbolCountMismatch(ValueError):
    pass


@dataclass(frozen=True)
class BoxedPartition:
    """A partition with at most ``ell`` parts, each at most ``m``."""

    m: int
    ell: int
    partition: Partition

    def __post_init__(self):
        object.__setattr__(self, "partition", Partition(self.partition))
        if self.m < 0 or self.ell < 0:
            raise BoxViolation(f"box bounds must be >= 0, got {self.m}x{self.ell}")
        lam = self.partition
        if len(lam) > self.ell:
            raise BoxViolation(f"{len(lam)} parts do not fit in {self.ell} rows")
        if lam and lam[0] > self.m:
            raise BoxViolation(f"part {lam[0]} does not fit in {self.m} columns")

    @property
    def weight(self) -> int:
        return self.partition.weight


class BinaryWord(str):
    """A string over the symbols ``1`` and ``2``."""

    def __new__(cls, symbols=""):
        if not isinstance(symbols, str):
            symbols = "".join(str(s) for s in symbols)
        bad = set(symbols) - {"1", "2"}
        if bad:
            raise ParseError(f"word may only contain 1 and 2, found {sorted(bad)}")
        return super().__new__(cls, symbols)

    @property
    def ones(self) -> int:
        return self.count("1")

    @property
    def twos(self) -> int:
        return self.count("2")


LEFT, DOWN = "L", "D"


@dataclass(frozen=True)
class LatticePath:
    """Unit steps from the top-right corner (m, 0) of an m x ell grid.

    Coordinates are (column, row) with rows counted downwards, so a Left
    step lowers the column and a Down step raises the row.
    """

    m: int
    ell: int
    steps: tuple[str, ...]

    def __post_init__(self):
        if self.steps.count(LEFT) != self.m or self.steps.count(DOWN) != self.ell:
            raise ValueError("path must make exactly m Left and ell Down steps")

    def corners(self) -> list[tuple[int, int]]:
        x, y = self.m, 0
        out = [(x, y)]
        for step in self.steps:
            if step == LEFT:
                x -= 1
            else:
                y += 1
            out.append((x, y))
        return out

    def as_word(self) -> BinaryWord:
        return BinaryWord("".join("1" if s == LEFT else "2" for s in self.steps))

    def __str__(self) -> str:
        return "".join(self.steps)


def lattice_path(bp: BoxedPartition) -> LatticePath:
    """Walk the boundary between the diagram and the rest of the box.

    At each grid corner the walker goes down while the cell to its lower
    left is a dot of the diagram, and left otherwise.
    """
    cells = set(bp.partition.cells())
    x, y = bp.m, 0
    steps = []
    while (x, y) != (0, bp.ell):
        if y == bp.ell:
            step = LEFT
        elif x == 0 or (y, x - 1) in cells:
            step = DOWN
        else:
            step = LEFT
        steps.append(step)
        if step == LEFT:
            x -= 1
        else:
            y += 1
    return LatticePath(bp.m, bp.ell, tuple(steps))


def path_encode(bp: BoxedPartition) -> BinaryWord:
    lam = bp.partition
    k = len(lam)
    chunks = []
    prev = bp.m
    for part in lam:
        chunks.append("1" * (prev - part) + "2")
        prev = part
    chunks.append("1" * prev)
    chunks.append("2" * (bp.ell - k))
    return BinaryWord("".join(chunks))


def path_decode(w: str, m: int, ell: int) -> BoxedPartition:
    """Invert :func:`path_encode`.

    The run of trailing 2s fixes the number of parts; reading backwards,
    each run of 1s after a 2 is the gap to the next smaller part.
    """
    w = BinaryWord(w)
    if w.ones != m or w.twos != ell:
        raise SymbolCountMismatch(
            f"expected {m} ones and {ell} twos, got {w.ones} and {w.twos}"
        )
    body = w.rstrip("2")
    k = ell - (len(w) - len(body))
    runs = body.split("2")
    # runs[i] is the block of 1s right after the i-th 2 (runs[0] precedes the first 2)
    parts = []
    current = 0
    for i in range(k, 0, -1):
        current += len(runs[i])
        parts.append(current)
    return BoxedPartition(m, ell, Partition(reversed(parts)))


def count_inversions(w: str) -> int:
    """Pairs (i, j), i < j, with a 2 at i and a 1 at j."""
    twos = total = 0
    for ch in BinaryWord(w):
        if ch == "2":
            twos += 1
        else:
            total += twos
    return total


# --- Franklin ----------------------------------------------------------------


class Move(enum.Enum):
    O = "O"
    OMEGA = "Omega"


@dataclass(frozen=True)
class Exceptional:
    k: int
    sign: int

    def to_json(self) -> dict:
        return {"exceptional": {"k": self.k, "sign": self.sign}}


@dataclass(frozen=True)
class Moved:
    result: DistinctPartition
    move: Move

    def to_json(self) -> dict:
        return {"moved": {"result": list(self.result), "move": self.move.value}}


FranklinOutcome = Union[Moved, Exceptional]


class FranklinInternalError(RuntimeError):
    pass


def franklin_classify(p: Partition) -> Union[Move, Exceptional]:
    p = DistinctPartition(p)
    b, s, k = base_length(p), slope_length(p), len(p)
    if s == k and (b == s or b == s + 1):
        return Exceptional(k, -1 if k % 2 else 1)
    return Move.O if b <= s else Move.OMEGA


def franklin_apply(p: Partition) -> FranklinOutcome:
    p = DistinctPartition(p)
    kind = franklin_classify(p)
    if isinstance(kind, Exceptional):
        return kind
    parts = list(p)
    if kind is Move.O:
        b = parts.pop()
        for i in range(b):
            parts[i] += 1
    else:
        s = slope_length(p)
        for i in range(s):
            parts[i] -= 1
        parts.append(s)
    try:
        result = DistinctPartition(parts)
    except PartitionError as exc:
        raise FranklinInternalError(f"{kind.value} on {tuple(p)} gave {parts}") from exc
    return Moved(result, kind)


def outcome_from_json(data: dict) -> FranklinOutcome:
    if "moved" in data:
        body = data["moved"]
        return Moved(DistinctPartition(body["result"]), Move(body["move"]))
    body = data["exceptional"]
    return Exceptional(int(body["k"]), int(body["sign"]))
