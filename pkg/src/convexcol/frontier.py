"""Left-to-right frontier sweep: an exact solver for list k- and H-coloring.

At position i the only thing the past contributes to the future is, for each
color c, how far right the Y-intervals already colored c reach. The state is
that vector of reaches with every reach < i collapsed to 0 ("expired").
Starting intervals branch over their lists; x_i then needs a color adjacent
(in H) to every active color. Deduplicating states per position keeps the
sweep polynomial in n for a fixed number of colors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import Coloring, ConvexInstance, TargetGraph, require_valid

State = tuple[int, ...]


@dataclass
class FrontierResult:
    decision: bool
    coloring: Coloring | None
    census: list[int] = field(default_factory=list)  # surviving states per position


def _mask(colors) -> int:
    m = 0
    for c in colors:
        m |= 1 << (c - 1)
    return m


def _x_chooser(inst: ConvexInstance, h: TargetGraph | None, width: int):
    """Return pick(i, active_mask) -> a usable color for x_i, or 0."""
    if h is None:
        def pick(i: int, active: int) -> int:
            free = _mask(inst.x_lists[i - 1]) & ~active
            return (free & -free).bit_length()
        return pick

    compat = [0] * (width + 1)
    for c in range(1, width + 1):
        compat[c] = _mask(d for d in range(1, width + 1) if h.adjacent(c, d))
    lists = [sorted(lst) for lst in inst.x_lists]

    def pick(i: int, active: int) -> int:
        for c in lists[i - 1]:
            if not active & ~compat[c]:
                return c
        return 0
    return pick


def _pareto(states: list[State]) -> list[State]:
    """Drop every state that is componentwise >= another surviving state."""
    kept: list[State] = []
    for s in sorted(states, key=lambda t: (sum(t), t)):
        if not any(all(a <= b for a, b in zip(k, s)) for k in kept):
            kept.append(s)
    return kept


def solve_frontier(inst: ConvexInstance, h: TargetGraph | None = None,
                   certificate: bool = True, dominance: bool = True) -> FrontierResult:
    """Exact decision plus (on YES) a witness coloring.

    ``h=None`` means list k-coloring (target K_k) through a specialised
    check; passing ``complete_target(k)`` runs the general H path instead.

    With ``dominance`` a state is discarded when another state at the same
    position reaches no further for any color: shorter reaches only remove
    constraints on later X-vertices, for every target H.
    """
    require_valid(inst)
    width = inst.k if h is None else h.order
    if h is not None and inst.k > h.order:
        raise ValueError(f"instance uses colors up to {inst.k}, target has {h.order}")
    n = inst.n
    starts: list[list[int]] = [[] for _ in range(n + 2)]
    for idx, v in enumerate(inst.y):
        starts[v.a].append(idx)
    lists = [sorted(v.colors) for v in inst.y]
    pick = _x_chooser(inst, h, width)

    # history[i][state] = (state at i - 1, colors of Y starting at i, color of x_i)
    history: list[dict[State, tuple[State, tuple[int, ...], int]]] = [{}]
    frontier: list[State] = [(0,) * width]
    census: list[int] = []
    for i in range(1, n + 1):
        branches: dict[State, tuple[State, tuple[int, ...]]] = {s: (s, ()) for s in frontier}
        for idx in starts[i]:
            b = inst.y[idx].b
            grown: dict[State, tuple[State, tuple[int, ...]]] = {}
            for s, (prev, chosen) in branches.items():
                for c in lists[idx]:
                    if s[c - 1] >= b:
                        t = s
                    else:
                        t = s[:c - 1] + (b,) + s[c:]
                    if t not in grown:
                        grown[t] = (prev, chosen + (c,))
            branches = grown
        level: dict[State, tuple[State, tuple[int, ...], int]] = {}
        for s, (prev, chosen) in branches.items():
            active = 0
            for c, r in enumerate(s):
                if r:
                    active |= 1 << c
            xc = pick(i, active)
            if not xc:
                continue
            t = tuple(r if r > i else 0 for r in s)
            if t not in level:
                level[t] = (prev, chosen, xc)
        if dominance and len(level) > 1:
            level = {t: level[t] for t in _pareto(list(level))}
        census.append(len(level))
        if certificate:
            history.append(level)
        frontier = list(level)
        if not frontier:
            census.extend([0] * (n - i))
            return FrontierResult(False, None, census)

    coloring = None
    if certificate:
        xs = [0] * n
        ys = [0] * len(inst.y)
        s = frontier[0]
        for i in range(n, 0, -1):
            prev, chosen, xc = history[i][s]
            xs[i - 1] = xc
            for idx, c in zip(starts[i], chosen):
                ys[idx] = c
            s = prev
        coloring = Coloring(tuple(xs), tuple(ys))
    return FrontierResult(True, coloring, census)


def state_census(inst: ConvexInstance, h: TargetGraph | None = None,
                 dominance: bool = False) -> list[int]:
    """Number of distinct normalized states alive after each position 1..n.

    Counts are taken without dominance pruning unless asked for.
    """
    return solve_frontier(inst, h, certificate=False, dominance=dominance).census
