"""Brute-force ground truth for small graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .model import BipartiteGraph, Coloring, ConvexInstance, TargetGraph, complete_target, to_bipartite_graph

DEFAULT_CAP = 24
ORDERING_CAP = 9


class OracleRefusal(ValueError):
    """The input is larger than the oracle is allowed to search."""


@dataclass
class OracleResult:
    decision: bool
    coloring: Coloring | None


def brute_force_solve(g: BipartiteGraph, x_lists: Sequence[Iterable[int]],
                      y_lists: Sequence[Iterable[int]], h: TargetGraph,
                      cap: int = DEFAULT_CAP) -> OracleResult:
    """Exhaustive list H-coloring of a bipartite graph.

    Y-vertices are colored by backtracking (most neighbors first); after each
    choice every neighboring x must still have a list color adjacent in ``h``
    to all colors already placed around it. X-vertices only see Y-vertices,
    so once Y is colored each x is chosen independently.
    """
    size = g.x_count + g.y_count
    if size > cap:
        raise OracleRefusal(f"{size} vertices exceed the oracle cap of {cap}")
    xl = [sorted(set(c)) for c in x_lists]
    yl = [sorted(set(c)) for c in y_lists]
    if len(xl) != g.x_count or len(yl) != g.y_count:
        raise ValueError("list count does not match the graph")
    if any(not c for c in xl) or any(not c for c in yl):
        return OracleResult(False, None)

    order = sorted(range(g.y_count), key=lambda j: (-len(g.y_adj[j]), j))
    # options[i] = colors x_{i+1} may still take given the Y colors so far
    options = [list(c) for c in xl]
    y_colors = [0] * g.y_count

    def place(t: int) -> bool:
        if t == len(order):
            return True
        j = order[t]
        for c in yl[j]:
            saved = []
            ok = True
            for i in g.y_adj[j]:
                kept = [d for d in options[i - 1] if h.adjacent(d, c)]
                saved.append((i, options[i - 1]))
                options[i - 1] = kept
                if not kept:
                    ok = False
                    break
            if ok:
                y_colors[j] = c
                if place(t + 1):
                    return True
            for i, prev in reversed(saved):
                options[i - 1] = prev
        return False

    if not place(0):
        return OracleResult(False, None)
    return OracleResult(True, Coloring(tuple(o[0] for o in options), tuple(y_colors)))


def brute_force_instance(inst: ConvexInstance, h: TargetGraph | None = None,
                         cap: int = DEFAULT_CAP) -> OracleResult:
    h = complete_target(inst.k) if h is None else h
    return brute_force_solve(to_bipartite_graph(inst), inst.x_lists,
                             [v.colors for v in inst.y], h, cap)


def find_convex_ordering_bruteforce(g: BipartiteGraph, cap: int = ORDERING_CAP) -> list[int] | None:
    """First X-permutation (lexicographically) making every Y-neighborhood consecutive.

    Backtracking over prefixes: a Y whose neighbors are partly placed must
    have them at the end of the prefix, otherwise no extension can close the
    gap.
    """
    if g.x_count > cap:
        raise OracleRefusal(f"{g.x_count} X-vertices exceed the ordering cap of {cap}")
    nbrs = [set(a) for a in g.y_adj]
    x_adj = g.x_adj()
    placed_count = [0] * g.y_count
    prefix: list[int] = []
    used = [False] * (g.x_count + 1)

    def consistent(x: int) -> bool:
        # every Y that is open (some but not all neighbors placed) must contain x
        for j in range(g.y_count):
            if 0 < placed_count[j] < len(nbrs[j]) and x not in nbrs[j]:
                return False
        return True

    def extend() -> bool:
        if len(prefix) == g.x_count:
            return True
        for x in range(1, g.x_count + 1):
            if used[x] or not consistent(x):
                continue
            used[x] = True
            prefix.append(x)
            for j in x_adj[x - 1]:
                placed_count[j - 1] += 1
            if extend():
                return True
            for j in x_adj[x - 1]:
                placed_count[j - 1] -= 1
            prefix.pop()
            used[x] = False
        return False

    return list(prefix) if extend() else None


def is_consecutive_under(g: BipartiteGraph, x_order: Sequence[int]) -> bool:
    pos = {x: p for p, x in enumerate(x_order)}
    for adj in g.y_adj:
        if adj:
            ps = sorted(pos[i] for i in adj)
            if ps[-1] - ps[0] + 1 != len(ps):
                return False
    return True
