"""Seeded generators for convex and biconvex instances and target graphs.

All randomness comes from :class:`SplitMix64` (Steele, Lea and Flood's
64-bit mixing generator with its published constants). Draws are defined
exactly below, so a (generator version, seed, parameters) triple pins the
output bytes regardless of platform or Python version.
"""

from __future__ import annotations

from itertools import combinations

from .model import ConvexInstance, TargetGraph, YVertex

GENERATOR_VERSION = "convexcol-gen/1 splitmix64"

_MASK64 = (1 << 64) - 1


class SplitMix64:
    GAMMA = 0x9E3779B97F4A7C15
    MUL1 = 0xBF58476D1CE4E5B9
    MUL2 = 0x94D049BB133111EB

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + self.GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * self.MUL1) & _MASK64
        z = ((z ^ (z >> 27)) * self.MUL2) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish integer in [0, bound) by multiply-shift."""
        return (self.next() * bound) >> 64

    def between(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def random(self) -> float:
        return (self.next() >> 11) * (1.0 / (1 << 53))

    def chance(self, p: float) -> bool:
        return self.random() < p

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def derive_seed(seed: int, *salt: int) -> int:
    """Independent sub-seed for case ``salt`` of a run seeded with ``seed``."""
    rng = SplitMix64(seed)
    for s in salt:
        rng = SplitMix64(rng.next() ^ (s & _MASK64))
    return rng.next()


def _random_list(rng: SplitMix64, k: int, density: float) -> frozenset[int]:
    return frozenset(c for c in range(1, k + 1) if rng.chance(density))


def _check_params(n: int, count: int, k: int, density: float) -> None:
    if n < 1 or count < 0 or k < 1:
        raise ValueError("n and k must be positive, the Y-count non-negative")
    if not 0 < density <= 1:
        raise ValueError(f"density must lie in (0, 1], got {density}")


def gen_convex_instance(seed: int, n: int, y_count: int, k: int,
                        list_density: float) -> ConvexInstance:
    """Random intervals (two uniform endpoints, sorted) and independent random lists."""
    _check_params(n, y_count, k, list_density)
    rng = SplitMix64(seed)
    ys = []
    for _ in range(y_count):
        p, q = rng.between(1, n), rng.between(1, n)
        ys.append((min(p, q), max(p, q), _random_list(rng, k, list_density)))
    x_lists = tuple(_random_list(rng, k, list_density) for _ in range(n))
    return ConvexInstance(k, x_lists, tuple(YVertex(a, b, c) for a, b, c in ys),
                          generator=GENERATOR_VERSION)


class GenerationError(RuntimeError):
    pass


def _staircase(rng: SplitMix64, n: int, m: int, connected: bool) -> list[tuple[int, int]]:
    """Intervals whose left and right ends are both non-decreasing."""
    if connected:
        lefts = sorted([1] + [rng.between(1, n) for _ in range(m - 1)])
        spans = []
        prev_b = 1
        for idx, a in enumerate(lefts):
            need = lefts[idx + 1] if idx + 1 < m else n
            lo = max(a, prev_b, need)
            b = n if idx + 1 == m else rng.between(lo, min(n, lo + max(1, n // m)))
            spans.append((a, b))
            prev_b = b
        return spans
    draws = [sorted((rng.between(1, n), rng.between(1, n))) for _ in range(m)]
    lefts = sorted(a for a, _ in draws)
    rights = sorted(b for _, b in draws)
    return list(zip(lefts, rights))


def _perturb(rng: SplitMix64, spans: list[tuple[int, int]], n: int, rate: float):
    out = []
    for a, b in spans:
        if rng.chance(rate):
            if rng.chance(0.5):
                a = rng.between(a, b)
            else:
                b = rng.between(a, min(n, b + (b - a) + 1))
        out.append((a, b))
    return out


def _biconvex_under(spans: list[tuple[int, int]], n: int) -> bool:
    # Y sorted by (a, b): every x-neighborhood must be a run of consecutive Y's
    order = sorted(range(len(spans)), key=lambda t: (spans[t][0], spans[t][1], t))
    for i in range(1, n + 1):
        pos = [p for p, t in enumerate(order) if spans[t][0] <= i <= spans[t][1]]
        if pos and pos[-1] - pos[0] + 1 != len(pos):
            return False
    return True


def _connected(spans: list[tuple[int, int]], n: int) -> bool:
    # consecutive intervals must share an x and together cover 1..n
    reach = 0
    for a, b in sorted(spans):
        if (reach == 0 and a != 1) or (reach and a > reach):
            return False
        reach = max(reach, b)
    return reach == n


MAX_ATTEMPTS = 64


def gen_biconvex_instance(seed: int, n: int, m: int, k: int, density: float,
                          connected: bool = False) -> ConvexInstance:
    """A biconvex instance together with a Y-ordering certifying it.

    Intervals start from a staircase (both ends non-decreasing), get a few
    random endpoint moves, are sorted by (a, b) and kept only if every
    x-neighborhood is consecutive in that order (and, with ``connected``, the
    graph is connected with every x covered). The returned instance lists Y
    in a shuffled order; ``inst.y_order`` gives the certified order as 1-based
    Y numbers.
    """
    _check_params(n, m, k, density)
    if connected and m < 1:
        raise ValueError("a connected instance needs at least one Y-vertex")
    rng = SplitMix64(seed)
    for attempt in range(MAX_ATTEMPTS):
        spans = _perturb(rng, _staircase(rng, n, m, connected), n, 0.3)
        if not _biconvex_under(spans, n):
            continue
        if connected and not _connected(spans, n):
            continue
        spans.sort()
        y_lists = [_random_list(rng, k, density) for _ in spans]
        x_lists = tuple(_random_list(rng, k, density) for _ in range(n))
        perm = list(range(m))
        rng.shuffle(perm)
        # perm[p] = certified position of the Y stored at p
        ys = [None] * m
        for p, t in enumerate(perm):
            ys[p] = YVertex(spans[t][0], spans[t][1], y_lists[t])
        y_order = tuple(sorted(range(1, m + 1), key=lambda p: perm[p - 1]))
        return ConvexInstance(k, x_lists, tuple(ys), generator=GENERATOR_VERSION,
                              y_order=y_order)
    raise GenerationError(f"seed {seed}: no biconvex instance after {MAX_ATTEMPTS} attempts")


def gen_target(seed: int, order: int, edge_density: float, loop_density: float) -> TargetGraph:
    if order < 1:
        raise ValueError("order must be positive")
    rng = SplitMix64(seed)
    edges = frozenset(e for e in combinations(range(1, order + 1), 2) if rng.chance(edge_density))
    loops = frozenset(c for c in range(1, order + 1) if rng.chance(loop_density))
    return TargetGraph(order, edges, loops)
