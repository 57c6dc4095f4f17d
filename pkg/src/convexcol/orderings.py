"""Structural checks on bipartite graphs: distance layers, chain graphs,
multichain, biconvex and straight orderings, induced subdivided claws.

Vertices are ``("x", i)`` or ``("y", j)`` with 1-based indices; use
:func:`vertex_name` / :func:`parse_vertex` for the ``"x3"`` spelling.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .model import BipartiteGraph
from .oracle import OracleRefusal

Vertex = tuple[str, int]

SUBD_CAP = 60


def vertex_name(v: Vertex) -> str:
    return f"{v[0]}{v[1]}"


def parse_vertex(text: str) -> Vertex:
    m = re.fullmatch(r"([xy])(\d+)", text.strip())
    if not m:
        raise ValueError(f"not a vertex name: {text!r}")
    return (m.group(1), int(m.group(2)))


def vertices(g: BipartiteGraph) -> list[Vertex]:
    return [("x", i) for i in range(1, g.x_count + 1)] + [("y", j) for j in range(1, g.y_count + 1)]


def neighborhoods(g: BipartiteGraph) -> dict[Vertex, frozenset[Vertex]]:
    nb: dict[Vertex, set[Vertex]] = {v: set() for v in vertices(g)}
    for i, j in g.edges():
        nb[("x", i)].add(("y", j))
        nb[("y", j)].add(("x", i))
    return {v: frozenset(s) for v, s in nb.items()}


@dataclass
class LayeredOrdering:
    source: Vertex
    layers: list[tuple[Vertex, ...]]
    unreached: tuple[Vertex, ...] = ()


def bfs_layers(g: BipartiteGraph, v0: Vertex) -> LayeredOrdering:
    nb = neighborhoods(g)
    if v0 not in nb:
        raise ValueError(f"{vertex_name(v0)} is not a vertex of the graph")
    dist = {v0: 0}
    queue = deque([v0])
    while queue:
        u = queue.popleft()
        for w in sorted(nb[u]):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    depth = max(dist.values())
    layers = [tuple(sorted(v for v, d in dist.items() if d == t)) for t in range(depth + 1)]
    unreached = tuple(v for v in vertices(g) if v not in dist)
    return LayeredOrdering(v0, layers, unreached)


@dataclass
class ChainCheck:
    ok: bool
    witness: tuple[Vertex, Vertex, Vertex, Vertex] | None = None  # edges (w0, w1), (w2, w3)


def is_chain_between(g: BipartiteGraph, side_a: Iterable[Vertex], side_b: Iterable[Vertex],
                     nb: dict[Vertex, frozenset[Vertex]] | None = None) -> ChainCheck:
    """Are the edges between two disjoint vertex sets a chain graph (2K2-free)?

    Neighborhoods of ``side_a`` restricted to ``side_b`` are sorted by size;
    the edge set is a chain graph iff each one contains the next.
    """
    nb = neighborhoods(g) if nb is None else nb
    b_set = frozenset(side_b)
    restricted = sorted(((nb[u] & b_set, u) for u in side_a), key=lambda t: (-len(t[0]), t[1]))
    for (big, u), (small, v) in zip(restricted, restricted[1:]):
        if not small <= big:
            p = min(small - big)
            q = min(big - small)
            return ChainCheck(False, (u, q, v, p))
    return ChainCheck(True)


@dataclass
class MultichainCheck:
    ok: bool
    layer: int | None = None  # failing pair is (layer, layer + 1)
    witness: tuple[Vertex, Vertex, Vertex, Vertex] | None = None


def verify_multichain(g: BipartiteGraph, layered: LayeredOrdering) -> MultichainCheck:
    nb = neighborhoods(g)
    for t in range(len(layered.layers) - 1):
        check = is_chain_between(g, layered.layers[t], layered.layers[t + 1], nb)
        if not check.ok:
            return MultichainCheck(False, t, check.witness)
    return MultichainCheck(True)


def multichain_starts(g: BipartiteGraph) -> list[Vertex]:
    """Every start vertex whose distance layers form a multichain ordering."""
    return [v for v in vertices(g) if verify_multichain(g, bfs_layers(g, v)).ok]


def _check_permutation(order: Sequence[int], size: int, what: str) -> None:
    if sorted(order) != list(range(1, size + 1)):
        raise ValueError(f"{what} is not a permutation of 1..{size}")


def verify_biconvex(g: BipartiteGraph, x_order: Sequence[int], y_order: Sequence[int]) -> bool:
    """Both sides have consecutive neighborhoods under the given orders."""
    _check_permutation(x_order, g.x_count, "x_order")
    _check_permutation(y_order, g.y_count, "y_order")
    xpos = {x: p for p, x in enumerate(x_order)}
    ypos = {y: p for p, y in enumerate(y_order)}

    def runs(groups, pos) -> bool:
        for grp in groups:
            if grp:
                ps = sorted(pos[v] for v in grp)
                if ps[-1] - ps[0] + 1 != len(ps):
                    return False
        return True

    return runs(g.y_adj, xpos) and runs(g.x_adj(), ypos)


@dataclass
class StraightCheck:
    ok: bool
    crossing: tuple[tuple[Vertex, Vertex], tuple[Vertex, Vertex]] | None = None


def verify_straight(g: BipartiteGraph, order: Sequence[Vertex]) -> StraightCheck:
    """Every crossing pair of edges has at least one straight pair present.

    Edges xy and x'y' cross when x < x' and y > y'; the straight pairs are
    (x, y') and (x', y).
    """
    if sorted(order) != sorted(vertices(g)):
        raise ValueError("order is not a permutation of the vertices")
    pos = {v: p for p, v in enumerate(order)}
    edge_set = {(("x", i), ("y", j)) for i, j in g.edges()}
    edges = sorted(edge_set, key=lambda e: (pos[e[0]], pos[e[1]]))
    for (x, y), (x2, y2) in combinations(edges, 2):
        if pos[x] > pos[x2]:
            x, y, x2, y2 = x2, y2, x, y
        if pos[x] < pos[x2] and pos[y] > pos[y2]:
            if (x, y2) not in edge_set and (x2, y) not in edge_set:
                return StraightCheck(False, ((x, y), (x2, y2)))
    return StraightCheck(True)


@dataclass
class SubdividedClaw:
    """Induced subdivided claw: ``center`` - ``middles[t]`` - ``leaves[t]``."""

    center: Vertex
    middles: tuple[Vertex, Vertex, Vertex]
    leaves: tuple[Vertex, Vertex, Vertex]
    all_vertices: tuple[Vertex, ...] = field(init=False)

    def __post_init__(self):
        self.all_vertices = (self.center,) + self.middles + self.leaves


def is_induced_subdivided_claw(nb: dict[Vertex, frozenset[Vertex]], claw: SubdividedClaw) -> bool:
    """Check all 6 edges and all 15 non-edges among the seven vertices."""
    vs = claw.all_vertices
    if len(set(vs)) != 7:
        return False
    wanted = {frozenset((claw.center, m)) for m in claw.middles}
    wanted |= {frozenset(p) for p in zip(claw.middles, claw.leaves)}
    for u, w in combinations(vs, 2):
        if (w in nb[u]) != (frozenset((u, w)) in wanted):
            return False
    return True


def find_subdivided_k13(g: BipartiteGraph, cap: int = SUBD_CAP) -> SubdividedClaw | None:
    """An induced subdivision of K_{1,3}, or None.

    In a bipartite graph the three middles are pairwise non-adjacent, and so
    are center and leaves, so it suffices to find a center with three
    neighbors each owning a private neighbor (adjacent to it and to neither of
    the other two, and different from the center).
    """
    size = g.x_count + g.y_count
    if size > cap:
        raise OracleRefusal(f"{size} vertices exceed the detector cap of {cap}")
    nb = neighborhoods(g)
    for center in vertices(g):
        if len(nb[center]) < 3:
            continue
        for trio in combinations(sorted(nb[center]), 3):
            private = []
            for t, m in enumerate(trio):
                others = nb[trio[(t + 1) % 3]] | nb[trio[(t + 2) % 3]]
                own = sorted(nb[m] - others - {center})
                if not own:
                    break
                private.append(own[0])
            else:
                claw = SubdividedClaw(center, trio, tuple(private))
                assert is_induced_subdivided_claw(nb, claw)
                return claw
    return None
