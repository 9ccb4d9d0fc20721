"""Gale's path tracer for the Hex theorem, with a connectivity oracle.

Cells are ``(r, c)`` with ``r = 1..rows`` top to bottom and ``c = 1..cols``.
The neighbours of ``(r, c)`` are ``(r, c±1)``, ``(r±1, c)``, ``(r-1, c+1)``
and ``(r+1, c-1)``. Black owns the north and south sides, White the west
and east sides.

The tracer enters at the south-east junction with Black on its left and
leaves either at the north-east junction (Black wins) or the south-west
junction (White wins).
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass

from . import oracle
from .core import ParseError
from .report import VerifyReport

if os.environ.get("FERRERS_PURE_PYTHON"):
    from . import _hexcore_py as _kernel
else:
    try:
        from . import _hexcore as _kernel
    except ImportError:
        from . import _hexcore_py as _kernel

BACKEND = "compiled" if _kernel.__name__.endswith("_hexcore") else "python"

BLACK, WHITE = "Black", "White"
_CODE = {BLACK: 1, WHITE: 0}
_NAME = {1: BLACK, 0: WHITE}

EXHAUSTIVE_LIMIT = 20

Cell = tuple[int, int]
Vertex = frozenset  # the three cells (border cells included) meeting at a hexagon corner


class SizeGuardExceeded(oracle.SizeGuardExceeded):
    pass


class TraceError(RuntimeError):
    """The tracer broke one of its own guarantees; never expected on a valid board."""


@dataclass(frozen=True)
class HexBoard:
    rows: int
    cols: int
    cells: tuple[str, ...]  # one string of 'B'/'W' per row

    def __post_init__(self):
        cells = tuple(self.cells)
        object.__setattr__(self, "cells", cells)
        if self.rows < 1 or self.cols < 1:
            raise ValueError("a board needs at least one row and one column")
        if len(cells) != self.rows or any(len(row) != self.cols for row in cells):
            raise ValueError(f"cells do not form a {self.rows}x{self.cols} grid")
        if any(ch not in "BW" for row in cells for ch in row):
            raise ValueError("cells must be 'B' or 'W'")

    def colour(self, r: int, c: int) -> str:
        return BLACK if self.cells[r - 1][c - 1] == "B" else WHITE

    def flat(self) -> list[int]:
        return [1 if ch == "B" else 0 for row in self.cells for ch in row]

    @classmethod
    def from_flat(cls, rows: int, cols: int, flat) -> "HexBoard":
        cells = [
            "".join("B" if flat[r * cols + c] else "W" for c in range(cols)) for r in range(rows)
        ]
        return cls(rows, cols, tuple(cells))

    @classmethod
    def from_index(cls, rows: int, cols: int, index: int) -> "HexBoard":
        """Colouring number ``index``: cell i (row-major) is Black iff bit i is set."""
        return cls.from_flat(rows, cols, [(index >> i) & 1 for i in range(rows * cols)])

    @classmethod
    def uniform(cls, rows: int, cols: int, colour: str) -> "HexBoard":
        ch = "B" if colour == BLACK else "W"
        return cls(rows, cols, tuple(ch * cols for _ in range(rows)))

    @classmethod
    def from_text(cls, text: str) -> "HexBoard":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise ParseError("empty board")
        try:
            return cls(len(lines), len(lines[0]), tuple(lines))
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    def to_text(self) -> str:
        return "\n".join(self.cells) + "\n"

    @classmethod
    def from_json(cls, data) -> "HexBoard":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise ParseError(str(exc)) from None
        try:
            return cls(int(data["rows"]), int(data["cols"]), tuple(data["cells"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad board JSON: {exc}") from None

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "cells": list(self.cells)}


def parse_board(text: str) -> HexBoard:
    if text.lstrip().startswith("{"):
        return HexBoard.from_json(text)
    return HexBoard.from_text(text)


@dataclass(frozen=True)
class TraceResult:
    winner: str
    edge_path: tuple[Vertex, ...]
    witness_chain: tuple[Cell, ...]

    @property
    def steps(self) -> int:
        return len(self.edge_path) - 1

    def to_json(self) -> dict:
        return {
            "winner": self.winner,
            "steps": self.steps,
            "edge_path": [[list(c) for c in sorted(v)] for v in self.edge_path],
            "witness_chain": [list(c) for c in self.witness_chain],
        }


def corner_graph(rows: int, cols: int) -> tuple[set, set]:
    """Corners and sides of every board hexagon.

    A corner is the frozenset of the three cells meeting there (cells off the
    board included); a side is the frozenset of its two end corners.
    """
    around = [(0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1), (1, 0)]  # counter-clockwise
    vertices, edges = set(), set()
    for r in range(1, rows + 1):
        for c in range(1, cols + 1):
            ring = [(r + dr, c + dc) for dr, dc in around]
            corners = [frozenset({(r, c), ring[i], ring[(i + 1) % 6]}) for i in range(6)]
            vertices.update(corners)
            for i in range(6):
                edges.add(frozenset({corners[i - 1], corners[i]}))
    return vertices, edges


def _to_rc(cols: int, idx: int) -> Cell:
    w = cols + 2
    return idx // w, idx % w


def gale_trace(b: HexBoard) -> TraceResult:
    n, m = b.rows, b.cols
    flat = b.flat()
    status, winner, vertices, chain = _kernel.trace(n, m, flat)
    if status != 0:
        raise TraceError(f"trace failed with status {status} on {b.cells}")
    path = tuple(frozenset(_to_rc(m, x) for x in v) for v in vertices)
    result = TraceResult(_NAME[winner], path, tuple(_to_rc(m, x) for x in chain))
    if len(path) - 1 > _kernel.edge_bound(n, m):
        raise TraceError("path longer than the number of hexagon sides")
    if not witness_connects(b, result.witness_chain, result.winner):
        raise TraceError(f"witness chain for {result.winner} does not validate")
    return result


def witness_connects(b: HexBoard, chain, winner: str) -> bool:
    """Independent walk: is ``chain`` one-coloured, connected, and touching both sides?"""
    return bool(_kernel.chain_valid(b.rows, b.cols, b.flat(), list(chain), _CODE[winner]))


def chain_winner_oracle(b: HexBoard) -> frozenset:
    flat = b.flat()
    won = set()
    for colour in (BLACK, WHITE):
        if _kernel.connected(b.rows, b.cols, flat, _CODE[colour]):
            won.add(colour)
    if oracle.corrupted():
        return frozenset()
    return frozenset(won)


def verify_no_draw(
    rows: int,
    cols: int,
    exhaustive: bool = True,
    samples: int = 0,
    seed: int = 0,
) -> VerifyReport:
    """Trace every colouring (or ``samples`` seeded random ones) and cross-check."""
    report = VerifyReport(f"hex {rows}x{cols}", unit="boards")
    corrupt = oracle.corrupted()
    with report.timed():
        if exhaustive:
            if rows * cols > EXHAUSTIVE_LIMIT:
                raise SizeGuardExceeded(
                    f"exhaustive sweep refuses {rows}x{cols} (more than {EXHAUSTIVE_LIMIT} cells)"
                )
            total = 1 << (rows * cols)
            for index, reason in _kernel.sweep(rows, cols, 0, total, corrupt):
                report.fail({"rows": rows, "cols": cols, "index": index}, "no failure", reason)
            report.cases_run += total
        else:
            rng = random.Random(seed)
            for i in range(samples):
                flat = [rng.getrandbits(1) for _ in range(rows * cols)]
                reason = _kernel.check(rows, cols, flat, corrupt)
                report.cases_run += 1
                if reason is not None:
                    board = HexBoard.from_flat(rows, cols, flat)
                    report.fail({"sample": i, "board": board.to_json()}, "no failure", reason)
    return report


def board_shapes(max_cells: int) -> list[tuple[int, int]]:
    return [(n, m) for n in range(1, max_cells + 1) for m in range(1, max_cells // n + 1)]


def verify_hex(max_cells: int = 16, samples: int = 10_000, size: int = 11, seed: int = 0) -> VerifyReport:
    """Every board with at most ``max_cells`` cells exhaustively, plus seeded samples."""
    report = VerifyReport("hex", unit="boards")
    parts = [verify_no_draw(n, m) for n, m in board_shapes(max_cells)]
    if samples:
        parts.append(verify_no_draw(size, size, exhaustive=False, samples=samples, seed=seed))
    for part in parts:
        report.cases_run += part.cases_run
        report.failures.extend(part.failures)
        report.elapsed += part.elapsed
    return report
