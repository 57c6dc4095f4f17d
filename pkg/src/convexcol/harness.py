"""Differential testing and timing harnesses."""

from __future__ import annotations

import itertools
import json
import math
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .colordp import VARIANTS, compute_blocks, solve_color_dp, solve_hcol_usedset
from .frontier import solve_frontier
from .gen import SplitMix64, derive_seed, gen_convex_instance, gen_target
from .io import instance_to_obj, target_to_obj
from .model import ConvexInstance, TargetGraph, YVertex, complete_target, verify_coloring
from .oracle import DEFAULT_CAP, OracleRefusal, brute_force_instance

MAX_TARGET_ORDER = 4


class ConfigurationError(ValueError):
    pass


def algorithms(h_mode: str, full: bool = True) -> list[str]:
    """Solvers compared per case; ``full=False`` drops the duplicate K_k paths."""
    if h_mode == "complete":
        names = ["brute", "frontier"] + [f"color-dp:{v}" for v in VARIANTS]
        if full:
            names[2:2] = ["frontier-h"]
            names += [f"usedset:{v}" for v in VARIANTS]
        return names
    return ["brute", "frontier"] + [f"usedset:{v}" for v in VARIANTS]


@dataclass
class CaseResult:
    case: int
    instance: ConvexInstance
    target: TargetGraph | None
    decisions: dict[str, bool]
    certificate_ok: bool


def evaluate(case: int, inst: ConvexInstance, target: TargetGraph | None,
             names: Iterable[str]) -> CaseResult:
    """Run the named solvers on one instance. ``target=None`` means K_k."""
    h = complete_target(inst.k) if target is None else target
    d: dict[str, bool] = {}
    cert_ok = True
    blocks = compute_blocks(inst)
    for name in names:
        algo, _, variant = name.partition(":")
        if algo == "brute":
            d[name] = brute_force_instance(inst, h).decision
        elif algo == "frontier":
            fr = solve_frontier(inst, target)
            d[name] = fr.decision
            cert_ok = not fr.decision or (fr.coloring is not None
                                           and verify_coloring(inst, h, fr.coloring))
        elif algo == "frontier-h":
            d[name] = solve_frontier(inst, h).decision
        elif algo == "color-dp":
            d[name] = solve_color_dp(inst, variant, blocks).decision
        elif algo == "usedset":
            d[name] = solve_hcol_usedset(inst, h, variant, blocks).decision
        else:
            raise ConfigurationError(f"unknown solver {name!r}")
    return CaseResult(case, inst, target, d, cert_ok)


def _evaluate_packed(args):
    return evaluate(*args)


@dataclass
class DifftestReport:
    mode: str
    params: dict
    algorithms: list[str]
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.cases)

    def agreement(self) -> dict[str, dict[str, int]]:
        return {a: {b: sum(c.decisions[a] == c.decisions[b] for c in self.cases)
                    for b in self.algorithms} for a in self.algorithms}

    def counterexamples(self) -> list[CaseResult]:
        return [c for c in self.cases if len(set(c.decisions.values())) > 1]

    @property
    def frontier_agrees(self) -> int:
        return sum(c.decisions["frontier"] == c.decisions["brute"] for c in self.cases)

    @property
    def divergence(self) -> bool:
        return self.frontier_agrees != self.count or not all(c.certificate_ok for c in self.cases)

    def to_obj(self) -> dict:
        vs_brute = {a: self.count - sum(c.decisions[a] == c.decisions["brute"] for c in self.cases)
                    for a in self.algorithms if a != "brute"}
        return {
            "mode": self.mode,
            "params": self.params,
            "count": self.count,
            "algorithms": self.algorithms,
            "yes_counts": {a: sum(c.decisions[a] for c in self.cases) for a in self.algorithms},
            "agreement": self.agreement(),
            "disagreements_vs_brute": vs_brute,
            "frontier_vs_brute": {"agree": self.frontier_agrees, "total": self.count},
            "certificates_verified": sum(c.certificate_ok for c in self.cases),
            "divergence": self.divergence,
            "counterexamples": [_case_obj(c) for c in self.counterexamples()],
        }

    def summary(self) -> str:
        lines = [f"{self.mode}: {self.count} cases; frontier vs brute "
                 f"{self.frontier_agrees}/{self.count}"]
        obj = self.to_obj()
        for a, bad in obj["disagreements_vs_brute"].items():
            lines.append(f"  {a:<26} disagrees with brute on {bad}")
        return "\n".join(lines) + "\n"

    def write_counterexamples(self, out_dir: str | Path) -> list[Path]:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        paths = []
        for c in self.counterexamples():
            p = out / f"case-{c.case:05d}.json"
            p.write_text(json.dumps(_case_obj(c), separators=(",", ":")) + "\n", encoding="utf-8")
            paths.append(p)
        return paths


def _case_obj(c: CaseResult) -> dict:
    obj = {"case": c.case, "instance": instance_to_obj(c.instance),
           "decisions": {a: ("YES" if v else "NO") for a, v in c.decisions.items()}}
    if c.target is not None:
        obj["target"] = target_to_obj(c.target)
    return obj


def random_case(seed: int, case: int, max_n: int, max_y: int, k: int,
                h_mode: str) -> tuple[int, ConvexInstance, TargetGraph | None]:
    rng = SplitMix64(derive_seed(seed, case))
    n = rng.between(1, max_n)
    y_count = rng.between(0, max_y)
    density = 0.4 + 0.6 * rng.random()
    target = None
    if h_mode == "random":
        order = rng.between(1, MAX_TARGET_ORDER)
        target = gen_target(rng.next(), order, rng.random(), 0.25)
        k = order
    inst = gen_convex_instance(rng.next(), n, y_count, k, density)
    return case, inst, target


def _run(mode: str, params: dict, cases: Iterable[tuple], jobs: int,
         full: bool = True) -> DifftestReport:
    names = algorithms(params.get("target", "complete"), full)
    report = DifftestReport(mode, params, names)
    work = (c + (names,) for c in cases)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            report.cases = list(pool.map(_evaluate_packed, work, chunksize=64))
    else:
        report.cases = [evaluate(*c) for c in work]
    return report


def run_difftest(count: int, seed: int, max_n: int, max_y: int, k: int,
                 h_spec: str = "complete", jobs: int = 1) -> DifftestReport:
    """Seeded random instances, every solver, decisions cross-tabulated.

    ``h_spec`` is ``complete`` (K_k) or ``random`` (a fresh random target of
    order <= 4 with loops per case; ``k`` is then ignored).
    """
    if h_spec not in ("complete", "random"):
        raise ConfigurationError(f"unknown target spec {h_spec!r}")
    if count < 0 or max_n < 1 or max_y < 0 or k < 1:
        raise ConfigurationError("count, max_y >= 0 and max_n, k >= 1 required")
    if max_n + max_y > DEFAULT_CAP:
        raise ConfigurationError(
            f"max_n + max_y = {max_n + max_y} exceeds the oracle cap of {DEFAULT_CAP}")
    params = {"count": count, "seed": seed, "max_n": max_n, "max_y": max_y,
              "k": k, "target": h_spec}
    cases = (random_case(seed, t, max_n, max_y, k, h_spec) for t in range(count))
    return _run("random", params, cases, jobs)


def exhaustive_instances(max_n: int, max_y: int, k: int) -> Iterator[ConvexInstance]:
    """Every instance up to the bounds: interval multisets times all list tuples."""
    subsets = [frozenset(c for c in range(1, k + 1) if m >> (c - 1) & 1) for m in range(1 << k)]
    for n in range(1, max_n + 1):
        spans = [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]
        for m in range(max_y + 1):
            for chosen in itertools.combinations_with_replacement(spans, m):
                for lists in itertools.product(subsets, repeat=n + m):
                    yield ConvexInstance(k, lists[:n], tuple(
                        YVertex(a, b, c) for (a, b), c in zip(chosen, lists[n:])))


def run_exhaustive(max_n: int, max_y: int, k: int, jobs: int = 1) -> DifftestReport:
    """All instances within the bounds against brute force, frontier and color-dp.

    The H-path duplicates (``frontier-h``, ``usedset:*``) are left to the
    random difftest to keep the sweep fast.
    """
    if max_n + max_y > DEFAULT_CAP:
        raise ConfigurationError("exhaustive bounds exceed the oracle cap")
    params = {"max_n": max_n, "max_y": max_y, "k": k, "target": "complete"}
    cases = ((t, inst, None) for t, inst in enumerate(exhaustive_instances(max_n, max_y, k)))
    return _run("exhaustive", params, cases, jobs, full=False)


# -- timing -------------------------------------------------------------------

BENCH_ALGOS = ("frontier", "color-dp", "brute")


@dataclass
class BenchRow:
    size: int
    states: int | None
    millis: float | None
    decision: bool | None

    @property
    def refused(self) -> bool:
        return self.millis is None


def bench_instance(seed: int, size: int, k: int, density: float) -> ConvexInstance:
    return gen_convex_instance(derive_seed(seed, size), size, size // 2, k, density)


def run_bench(sizes: Iterable[int], k: int, algo: str, seed: int = 1, density: float = 1.0,
              repeats: int = 5, variant: str = "pseudocode-and") -> list[BenchRow]:
    """Median wall time over ``repeats`` runs per size on n = size, |Y| = size // 2.

    ``states`` is deterministic: surviving frontier states summed over
    positions, or table cells touched by the segment-table sweep.
    """
    if algo not in BENCH_ALGOS:
        raise ConfigurationError(f"unknown algorithm {algo!r}; expected one of {BENCH_ALGOS}")
    rows = []
    for size in sizes:
        inst = bench_instance(seed, size, k, density)
        if algo == "brute" and inst.n + len(inst.y) > DEFAULT_CAP:
            rows.append(BenchRow(size, None, None, None))
            continue
        times = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            if algo == "frontier":
                res = solve_frontier(inst)
                states, decision = sum(res.census), res.decision
            elif algo == "color-dp":
                res = solve_color_dp(inst, variant)
                cols = (1 << k) - 1
                states = cols * sum(len(s.expanded) for s in compute_blocks(inst).stages)
                decision = res.decision
            else:
                try:
                    res = brute_force_instance(inst)
                except OracleRefusal:
                    rows.append(BenchRow(size, None, None, None))
                    break
                states, decision = len(inst.y), res.decision
            times.append((time.perf_counter() - t0) * 1000.0)
        else:
            rows.append(BenchRow(size, states, statistics.median(times), decision))
    return rows


def bench_csv(rows: list[BenchRow]) -> str:
    out = ["size,states,millis"]
    for r in rows:
        if r.refused:
            out.append(f"{r.size},,refused")
        else:
            out.append(f"{r.size},{r.states},{r.millis:.3f}")
    return "\n".join(out) + "\n"


def loglog_slope(rows: list[BenchRow]) -> float:
    """Least-squares slope of log(millis) against log(size) over timed rows."""
    pts = [(math.log(r.size), math.log(max(r.millis, 1e-6))) for r in rows if not r.refused]
    if len(pts) < 2:
        raise ValueError("need at least two timed sizes")
    mx = sum(p for p, _ in pts) / len(pts)
    my = sum(q for _, q in pts) / len(pts)
    return (sum((p - mx) * (q - my) for p, q in pts)
            / sum((p - mx) ** 2 for p, _ in pts))
