"""Segment-table dynamic program for list coloring on convex bipartite graphs.

The sweep visits the distinct right endpoints b_1 < ... < b_beta of the
Y-intervals. Stage j works on the prefix x_1..x_{b_j}; its table has one row
per *segment* (a maximal X-run between consecutive breakpoints) and one column
per color subset.

Two column semantics share the same machinery:

* k-coloring (``target is None``): column S is a proper subset of the colors
  and a cell says "some coloring of the prefix avoids S on this segment".
* H-coloring (``target`` given): column U is any subset of V(H) and a cell
  says "some coloring of the prefix uses only colors of U on this segment".

Step 2B has three published readings that disagree with each other, so the
rule is selected with ``variant``:

``off``
    no propagation (reproduces the worked example's second table).
``pseudocode-and``
    ``cell(i, S) &= cell(i - 1, S)`` left to right inside N(y).
``prose-superset``
    ``cell(i, S)`` survives iff some superset S' of S is true at ``i - 1``.

None of the variants is guaranteed to agree with an exact solver; use
:mod:`convexcol.frontier` when a correct answer matters.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from .model import ConvexInstance, TargetGraph, require_valid

VARIANTS = ("off", "pseudocode-and", "prose-superset")
STEPS = ("1", "2a", "2b", "3")


def _mask(colors) -> int:
    m = 0
    for c in colors:
        m |= 1 << (c - 1)
    return m


def mask_colors(mask: int) -> list[int]:
    return [b + 1 for b in range(mask.bit_length()) if mask >> b & 1]


def column_order(width: int, proper: bool) -> list[int]:
    """Column masks by subset size, then lexicographically; the empty set last."""
    full = (1 << width) - 1
    masks = [m for m in range(1, full + 1) if not (proper and m == full)]
    masks.sort(key=lambda m: (bin(m).count("1"), mask_colors(m)))
    return masks + [0]


@lru_cache(maxsize=None)
def _lacking(width: int, bit: int) -> int:
    """Bitset (over masks) of the subsets that do not contain color bit ``bit``."""
    sel = 0
    for m in range(1 << width):
        if not m >> bit & 1:
            sel |= 1 << m
    return sel


def _down_closure(row: int, width: int) -> int:
    # cell S becomes true when some superset of S is true
    for bit in range(width):
        step = 1 << bit
        row |= (row >> step) & _lacking(width, bit)
    return row


def _up_closure(row: int, width: int) -> int:
    # cell U becomes true when some subset of U is true
    for bit in range(width):
        step = 1 << bit
        row |= (row << step) & ~_lacking(width, bit) & ((1 << (1 << width)) - 1)
    return row


# -- block structure ---------------------------------------------------------

@dataclass(frozen=True)
class Stage:
    """One value b_j of the sweep; Y-vertex numbers are 1-based input positions."""

    j: int
    b: int
    prev_b: int
    new_y: tuple[int, ...]       # Y_j minus Y_{j-1}, in processing order
    y_set: tuple[int, ...]       # Y_j
    z_set: tuple[int, ...]       # Z_j
    breakpoints: tuple[int, ...]  # A(j)
    expanded: tuple[int, ...]     # A'(j)


@dataclass(frozen=True)
class BlockStructure:
    instance: ConvexInstance
    b_values: tuple[int, ...]
    stages: tuple[Stage, ...]
    sentinel: bool  # True when n was appended because no interval ends there
    initial: tuple[int, ...] = (1,)

    @property
    def beta(self) -> int:
        return len(self.stages)

    def stage(self, j: int) -> Stage:
        if not 1 <= j <= len(self.stages):
            raise IndexError(f"stage {j} outside 1..{len(self.stages)}")
        return self.stages[j - 1]

    def previous_breakpoints(self, j: int) -> tuple[int, ...]:
        return self.initial if j == 1 else self.stage(j - 1).breakpoints


def compute_blocks(inst: ConvexInstance) -> BlockStructure:
    """Stages, Y_j/Z_j sets and the breakpoint sets A(j), A'(j).

    The fictitious stage 0 has the single breakpoint 1 (the first X index),
    which plays the role of the empty initial row.
    """
    ys = list(enumerate(inst.y, 1))
    bs = sorted({v.b for v in inst.y})
    sentinel = not bs or bs[-1] < inst.n
    if sentinel:
        bs.append(inst.n)
    stages = []
    prev_a: tuple[int, ...] = (1,)
    prev_b = 0
    for j, b in enumerate(bs, 1):
        y_set = tuple(t for t, v in ys if v.b <= b)
        z_set = tuple(t for t, v in ys if v.a <= b < v.b)
        new_y = tuple(t for t, v in sorted(
            ((t, v) for t, v in ys if v.b == b), key=lambda tv: (tv[1].a, tv[0])))
        a_j = tuple(sorted({inst.y[t - 1].a for t in z_set} | {b}))
        a_prime = tuple(sorted(
            set(prev_a) | {v.a for _, v in ys if prev_b < v.a <= b} | {b}))
        stages.append(Stage(j, b, prev_b, new_y, y_set, z_set, a_j, a_prime))
        prev_a, prev_b = a_j, b
    return BlockStructure(inst, tuple(bs), tuple(stages), sentinel)


# -- tables ------------------------------------------------------------------

@dataclass
class SegmentTable:
    """Boolean table indexed by (segment, color subset).

    ``rows[l]`` is a bitset over subset masks: bit ``mask`` of ``rows[l]`` is
    the cell of segment ``l`` (starting at ``starts[l]``) and the subset whose
    colors are the set bits of ``mask`` (bit c-1 for color c). In k-coloring
    mode the full color set is not a column and its bit stays clear.
    """

    j: int
    starts: tuple[int, ...]
    end: int
    width: int
    rows: list[int]
    target: TargetGraph | None = None

    @property
    def proper(self) -> bool:
        return self.target is None

    def copy(self) -> "SegmentTable":
        return SegmentTable(self.j, self.starts, self.end, self.width, list(self.rows), self.target)

    def segments(self) -> list[tuple[int, int]]:
        ends = [s - 1 for s in self.starts[1:]] + [self.end]
        return list(zip(self.starts, ends))

    def columns(self) -> list[int]:
        return column_order(self.width, self.proper)

    def cell(self, segment: int, colors) -> bool:
        return bool(self.rows[segment] >> _mask(colors) & 1)

    def row_cells(self, segment: int) -> list[bool]:
        """Cells of one row in display column order."""
        return [bool(self.rows[segment] >> m & 1) for m in self.columns()]


UsedSetTable = SegmentTable  # same layout; columns are used-color sets


@lru_cache(maxsize=None)
def _all_true(width: int, proper: bool) -> int:
    row = (1 << (1 << width)) - 1
    if proper:
        row &= ~(1 << ((1 << width) - 1))
    return row


@lru_cache(maxsize=None)
def _x_row(lmask: int, width: int, proper: bool) -> int:
    # avoid S: L(x) minus S nonempty; use U: L(x) meets U
    row = 0
    for m in range(1 << width):
        if (lmask & ~m if proper else lmask & m):
            row |= 1 << m
    return row & _all_true(width, proper)


@lru_cache(maxsize=None)
def _y_row_avoid(ymask: int, width: int) -> int:
    return sum(1 << m for m in range(1 << width) if m & ymask) & _all_true(width, True)


def initial_table(inst: ConvexInstance, target: TargetGraph | None = None) -> SegmentTable:
    width = inst.k if target is None else target.order
    return SegmentTable(0, (1,), 0, width, [_all_true(width, target is None)], target)


def _feasible_row(inst: ConvexInstance, lo: int, hi: int, width: int, proper: bool) -> int:
    row = _all_true(width, proper)
    for i in range(lo, hi + 1):
        row &= _x_row(_mask(inst.x_lists[i - 1]), width, proper)
    return row


def step1_extend(table: SegmentTable, blocks: BlockStructure, j: int) -> SegmentTable:
    """Expand T_{j-1} onto the segments of A'(j), checking X-lists on new parts."""
    stage = blocks.stage(j)
    inst = blocks.instance
    old = dict(zip(table.starts, table.rows))
    boundary = table.starts[-1]
    starts = stage.expanded
    ends = [s - 1 for s in starts[1:]] + [stage.b]
    rows = []
    for s, e in zip(starts, ends):
        if s in old and s != boundary:
            rows.append(old[s])
            continue
        feas = _feasible_row(inst, s, e, table.width, table.proper)
        if s == boundary:
            feas &= old[s]
        rows.append(feas)
    return SegmentTable(j, starts, stage.b, table.width, rows, table.target)


def _y_allows(table: SegmentTable, colors: frozenset[int]) -> int:
    if table.proper:
        return _y_row_avoid(_mask(colors), table.width)
    h = table.target
    allow = 0
    for m in range(1 << table.width):
        if any(all(h.adjacent(c, u) for u in mask_colors(m)) for c in colors):
            allow |= 1 << m
    return allow


def step2a_filter(table: SegmentTable, blocks: BlockStructure, j: int, y: int) -> SegmentTable:
    """Clear cells of segments inside N(y) whose column leaves y no color."""
    v = blocks.instance.y[y - 1]
    allow = _y_allows(table, v.colors)
    out = table.copy()
    for ell, s in enumerate(out.starts):
        if v.a <= s <= v.b:
            out.rows[ell] &= allow
    return out


def step2b_propagate(table: SegmentTable, blocks: BlockStructure, j: int, y: int,
                     variant: str) -> SegmentTable:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    out = table.copy()
    if variant == "off":
        return out
    v = blocks.instance.y[y - 1]
    for ell in range(1, len(out.starts)):
        if not v.a < out.starts[ell] <= v.b:
            continue
        prev = out.rows[ell - 1]
        if variant == "prose-superset":
            prev = _down_closure(prev, out.width) if out.proper else _up_closure(prev, out.width)
        out.rows[ell] &= prev
    return out


def fold_rows(acc: int, other: int, width: int, proper: bool) -> int:
    """Merge two adjacent segments' rows.

    k-coloring: cell(S) iff some S1, S2 with S within S1 & S2 are both true.
    H-coloring: cell(U) iff some U1, U2 with U1 | U2 within U are both true.
    """
    close = _down_closure if proper else _up_closure
    return close(acc, width) & close(other, width)


def step3_compact(table: SegmentTable, blocks: BlockStructure, j: int) -> SegmentTable:
    """Fold the A'(j) rows down to one row per breakpoint of A(j).

    Rows left of the first retained breakpoint are folded into the first row
    so that their infeasibility is not lost.
    """
    stage = blocks.stage(j)
    pos = [table.starts.index(a) for a in stage.breakpoints]
    bounds = pos[1:] + [len(table.starts)]
    rows = []
    for idx, (first, stop) in enumerate(zip(pos, bounds)):
        acc = table.rows[first]
        extra = list(range(first + 1, stop))
        if idx == 0:
            extra = list(range(0, first)) + extra
        for ell in extra:
            acc = fold_rows(acc, table.rows[ell], table.width, table.proper)
        rows.append(acc)
    return SegmentTable(j, stage.breakpoints, stage.b, table.width, rows, table.target)


# -- driver -------------------------------------------------------------------

@dataclass
class ColorDPResult:
    decision: bool
    table: SegmentTable
    variant: str
    blocks: BlockStructure = field(repr=False)


def _run(inst: ConvexInstance, target: TargetGraph | None, variant: str,
         stop: tuple[int, str] | None = None, blocks: BlockStructure | None = None):
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    blocks = compute_blocks(inst) if blocks is None else blocks
    table = initial_table(inst, target)
    for stage in blocks.stages:
        j = stage.j
        table = step1_extend(table, blocks, j)
        if stop == (j, "1"):
            return blocks, table
        for y in stage.new_y:
            table = step2a_filter(table, blocks, j, y)
        if stop == (j, "2a"):
            return blocks, table
        for y in stage.new_y:
            table = step2b_propagate(table, blocks, j, y, variant)
        if stop == (j, "2b"):
            return blocks, table
        table = step3_compact(table, blocks, j)
        if stop == (j, "3"):
            return blocks, table
    return blocks, table


def solve_color_dp(inst: ConvexInstance, variant: str = "pseudocode-and",
                   blocks: BlockStructure | None = None) -> ColorDPResult:
    """Decide list k-colorability with the segment-table sweep (decision only)."""
    require_valid(inst)
    blocks, table = _run(inst, None, variant, blocks=blocks)
    return ColorDPResult(bool(table.rows[-1]), table, variant, blocks)


def solve_hcol_usedset(inst: ConvexInstance, h: TargetGraph,
                       variant: str = "pseudocode-and",
                       blocks: BlockStructure | None = None) -> ColorDPResult:
    """Used-color-set version of the sweep for list H-coloring."""
    require_valid(inst)
    if inst.k > h.order:
        raise ValueError(f"instance uses colors up to {inst.k}, target has {h.order}")
    blocks, table = _run(inst, h, variant, blocks=blocks)
    return ColorDPResult(bool(table.rows[-1]), table, variant, blocks)


# -- traces -------------------------------------------------------------------

@dataclass
class Snapshot:
    j: int
    step: str
    segments: list[tuple[int, int]]
    columns: list[int]
    cells: list[list[bool]]

    def to_obj(self) -> dict:
        return {
            "j": self.j,
            "step": self.step,
            "segments": [{"from": a, "to": b} for a, b in self.segments],
            "columns": [mask_colors(m) for m in self.columns],
            "cells": self.cells,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), separators=(",", ":")) + "\n"

    def render(self) -> str:
        def label(a: int, b: int) -> str:
            if b - a < 4:
                return "{" + ", ".join(f"x{i}" for i in range(a, b + 1)) + "}"
            return "{" + f"x{a}..x{b}" + "}"

        header = [""] + ["{" + ", ".join(map(str, mask_colors(m))) + "}" for m in self.columns]
        body = [[label(a, b)] + ["T" if c else "F" for c in row]
                for (a, b), row in zip(self.segments, self.cells)]
        widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
        lines = [f"T_{self.j} after step {self.step}"]
        for r in [header] + body:
            lines.append(" | ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        return "\n".join(lines) + "\n"


def trace_tables(inst: ConvexInstance, j: int, step: str, variant: str = "off") -> Snapshot:
    """The table of stage ``j`` right after ``step`` (one of 1, 2a, 2b, 3)."""
    require_valid(inst)
    if step not in STEPS:
        raise ValueError(f"unknown step {step!r}; expected one of {STEPS}")
    columns = column_order(inst.k, True)
    if not inst.y:
        if j != 1:
            raise IndexError(f"stage {j} outside 1..1")
        return Snapshot(j, step, [], columns, [])
    blocks = compute_blocks(inst)
    blocks.stage(j)
    _, table = _run(inst, None, variant, stop=(j, step))
    cells = [table.row_cells(ell) for ell in range(len(table.rows))]
    return Snapshot(j, step, table.segments(), columns, cells)
