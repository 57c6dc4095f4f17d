"""Instances, target graphs, colorings and the checks that tie them together.

Indices and colors are 1-based everywhere in the public API, matching the
JSON file formats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


@dataclass(frozen=True)
class YVertex:
    """A Y-vertex adjacent to exactly x_a, ..., x_b."""

    a: int
    b: int
    colors: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "colors", frozenset(self.colors))

    def covers(self, i: int) -> bool:
        return self.a <= i <= self.b


@dataclass(frozen=True)
class ConvexInstance:
    """A list-coloring instance on a convex bipartite graph.

    ``x_lists[i - 1]`` is the list of x_i; each Y-vertex carries its own
    interval of X-neighbors and its own list. ``generator`` and ``y_order``
    are optional provenance carried through serialization.
    """

    k: int
    x_lists: tuple[frozenset[int], ...]
    y: tuple[YVertex, ...] = ()
    generator: str | None = field(default=None, compare=False)
    y_order: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "x_lists", tuple(frozenset(c) for c in self.x_lists))
        object.__setattr__(
            self, "y", tuple(v if isinstance(v, YVertex) else YVertex(*v) for v in self.y)
        )
        if self.y_order is not None:
            object.__setattr__(self, "y_order", tuple(self.y_order))

    @property
    def n(self) -> int:
        return len(self.x_lists)

    def x_list(self, i: int) -> frozenset[int]:
        return self.x_lists[i - 1]


@dataclass(frozen=True)
class TargetGraph:
    """Homomorphism target H on colors 1..order; edges are stored as (lo, hi)."""

    order: int
    edges: frozenset[tuple[int, int]] = frozenset()
    loops: frozenset[int] = frozenset()

    def __post_init__(self):
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"edge ({u}, {v}) is a loop; use loops")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))
        object.__setattr__(self, "loops", frozenset(self.loops))
        for c in {c for e in self.edges for c in e} | self.loops:
            if not 1 <= c <= self.order:
                raise ValueError(f"color {c} outside 1..{self.order}")

    def adjacent(self, c1: int, c2: int) -> bool:
        if c1 == c2:
            return c1 in self.loops
        return (min(c1, c2), max(c1, c2)) in self.edges

    def is_complete(self) -> bool:
        return not self.loops and len(self.edges) == self.order * (self.order - 1) // 2


def complete_target(k: int) -> TargetGraph:
    return TargetGraph(k, frozenset(combinations(range(1, k + 1), 2)))


@dataclass(frozen=True)
class Coloring:
    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(self.x))
        object.__setattr__(self, "y", tuple(self.y))


@dataclass(frozen=True)
class BipartiteGraph:
    """General bipartite graph: X = 1..x_count, Y-vertex j adjacent to y_adj[j - 1]."""

    x_count: int
    y_adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "y_adj", tuple(tuple(sorted(a)) for a in self.y_adj))
        for j, adj in enumerate(self.y_adj, 1):
            if len(set(adj)) != len(adj):
                raise ValueError(f"y{j}: duplicate neighbors")
            for i in adj:
                if not 1 <= i <= self.x_count:
                    raise ValueError(f"y{j}: neighbor x{i} outside 1..{self.x_count}")

    @property
    def y_count(self) -> int:
        return len(self.y_adj)

    def x_adj(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.x_count)]
        for j, adj in enumerate(self.y_adj, 1):
            for i in adj:
                out[i - 1].append(j)
        return tuple(tuple(a) for a in out)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for j, adj in enumerate(self.y_adj, 1) for i in adj]


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


class InvalidInstanceError(ValueError):
    pass


def validate_instance(inst: ConvexInstance) -> ValidationReport:
    report = ValidationReport()
    bad = report.violations
    if not isinstance(inst.k, int) or inst.k < 1:
        bad.append(f"k: must be a positive integer, got {inst.k!r}")
    if inst.n < 1:
        bad.append("x_lists: at least one X-vertex is required")
    for i, colors in enumerate(inst.x_lists, 1):
        for c in sorted(colors):
            if not 1 <= c <= inst.k:
                bad.append(f"x_lists[{i}]: color {c} outside 1..{inst.k}")
    for j, v in enumerate(inst.y, 1):
        if v.a > v.b:
            bad.append(f"y[{j}]: interval reversed (a={v.a}, b={v.b})")
        if v.a < 1 or v.b > inst.n:
            bad.append(f"y[{j}]: interval [{v.a}, {v.b}] outside 1..{inst.n}")
        for c in sorted(v.colors):
            if not 1 <= c <= inst.k:
                bad.append(f"y[{j}].list: color {c} outside 1..{inst.k}")
    if inst.y_order is not None and sorted(inst.y_order) != list(range(1, len(inst.y) + 1)):
        bad.append("y_order: not a permutation of the Y-vertices")
    return report


def require_valid(inst: ConvexInstance) -> None:
    report = validate_instance(inst)
    if not report.ok:
        raise InvalidInstanceError("; ".join(report.violations))


def verify_coloring(inst: ConvexInstance, h: TargetGraph, col: Coloring) -> bool:
    """True iff ``col`` respects every list and maps every edge onto an edge of ``h``."""
    if len(col.x) != inst.n or len(col.y) != len(inst.y):
        raise ValueError(
            f"coloring has {len(col.x)}/{len(col.y)} colors, "
            f"instance has {inst.n}/{len(inst.y)} vertices"
        )
    if any(c not in lst for c, lst in zip(col.x, inst.x_lists)):
        return False
    if any(c not in v.colors for c, v in zip(col.y, inst.y)):
        return False
    for cy, v in zip(col.y, inst.y):
        for i in range(v.a, v.b + 1):
            if not h.adjacent(col.x[i - 1], cy):
                return False
    return True


def to_bipartite_graph(inst: ConvexInstance) -> BipartiteGraph:
    return BipartiteGraph(inst.n, tuple(tuple(range(v.a, v.b + 1)) for v in inst.y))


def intervals_of(g: BipartiteGraph) -> list[tuple[int, int]] | None:
    """Recover [a, b] per Y-vertex when every neighborhood is consecutive, else None."""
    out = []
    for adj in g.y_adj:
        if not adj or adj[-1] - adj[0] + 1 != len(adj):
            return None
        out.append((adj[0], adj[-1]))
    return out


def from_bipartite_graph(
    g: BipartiteGraph,
    k: int,
    x_lists: Sequence[Iterable[int]],
    y_lists: Sequence[Iterable[int]],
) -> ConvexInstance:
    spans = intervals_of(g)
    if spans is None:
        raise ValueError("graph is not convex under the identity X-ordering")
    return ConvexInstance(
        k, tuple(frozenset(c) for c in x_lists),
        tuple(YVertex(a, b, frozenset(c)) for (a, b), c in zip(spans, y_lists)),
    )
