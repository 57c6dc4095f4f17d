"""Command-line interface.

Every command prints JSON on stdout (``bench`` prints CSV unless ``--json``);
``--pretty`` adds a human-readable rendering on stderr.

Exit codes: 0 success / YES, 1 NO (solve, hcol, check), 2 invalid input,
3 difftest divergence between the frontier solver and brute force.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import colordp, frontier, gen, harness, io, oracle, orderings
from .model import BipartiteGraph, InvalidInstanceError, complete_target, verify_coloring

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_DIVERGENCE = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _pretty(args, text: str) -> None:
    if args.pretty:
        sys.stderr.write(text if text.endswith("\n") else text + "\n")


def _verdict(decision: bool) -> str:
    return "YES" if decision else "NO"


def _int_list(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


# -- solve / hcol --------------------------------------------------------------

def cmd_solve(args) -> int:
    inst = io.load_instance(io.read_text(args.input))
    h = complete_target(inst.k)
    out = {"algo": args.algo}
    coloring = None
    if args.algo == "frontier":
        res = frontier.solve_frontier(inst)
        decision, coloring = res.decision, res.coloring
    elif args.algo == "color-dp":
        out["variant"] = args.variant
        decision = colordp.solve_color_dp(inst, args.variant).decision
    else:
        res = oracle.brute_force_instance(inst, h)
        decision, coloring = res.decision, res.coloring
    out["decision"] = _verdict(decision)
    if args.certificate:
        out["certificate"] = io.coloring_to_obj(coloring) if coloring else None
        out["certificate_verified"] = bool(coloring) and verify_coloring(inst, h, coloring)
    _emit(out)
    _pretty(args, f"{args.algo}{' / ' + args.variant if args.algo == 'color-dp' else ''}: "
                  f"{out['decision']}")
    return EXIT_YES if decision else EXIT_NO


def cmd_hcol(args) -> int:
    inst = io.load_instance(io.read_text(args.input))
    h = io.load_target(io.read_text(args.target))
    out = {"algo": args.algo}
    coloring = None
    if args.algo == "frontier":
        res = frontier.solve_frontier(inst, h)
        decision, coloring = res.decision, res.coloring
    elif args.algo == "usedset":
        out["variant"] = args.variant
        decision = colordp.solve_hcol_usedset(inst, h, args.variant).decision
    else:
        res = oracle.brute_force_instance(inst, h)
        decision, coloring = res.decision, res.coloring
    out["decision"] = _verdict(decision)
    if args.certificate:
        out["certificate"] = io.coloring_to_obj(coloring) if coloring else None
        out["certificate_verified"] = bool(coloring) and verify_coloring(inst, h, coloring)
    _emit(out)
    _pretty(args, f"{args.algo}: {out['decision']}")
    return EXIT_YES if decision else EXIT_NO


# -- trace ---------------------------------------------------------------------

def cmd_trace(args) -> int:
    inst = io.load_instance(io.read_text(args.input))
    snap = colordp.trace_tables(inst, args.j, args.step, args.variant)
    sys.stdout.write(snap.to_json())
    _pretty(args, snap.render())
    return EXIT_YES


# -- check ---------------------------------------------------------------------

def cmd_check(args) -> int:
    text = io.read_text(args.input)
    g = io.load_graph_or_instance(text)
    out: dict = {"check": args.kind}
    if args.kind == "convex":
        order = _int_list(args.order)
        if order is None:
            order = oracle.find_convex_ordering_bruteforce(g)
            ok = order is not None
        else:
            if sorted(order) != list(range(1, g.x_count + 1)):
                raise UsageError("--order is not a permutation of the X-vertices")
            ok = oracle.is_consecutive_under(g, order)
        out.update(ok=ok, x_order=order)
    elif args.kind == "biconvex":
        x_order = _int_list(args.x_order)
        y_order = _int_list(args.y_order)
        if y_order is None:
            obj = json.loads(text)
            y_order = obj.get("y_order") if isinstance(obj, dict) else None
        if x_order is None:
            x_order = oracle.find_convex_ordering_bruteforce(g)
        if y_order is None:
            transposed = BipartiteGraph(g.y_count, g.x_adj())
            y_order = oracle.find_convex_ordering_bruteforce(transposed)
        ok = x_order is not None and y_order is not None and orderings.verify_biconvex(
            g, x_order, y_order)
        out.update(ok=ok, x_order=x_order, y_order=y_order)
    elif args.kind == "straight":
        if not args.order:
            raise UsageError("check straight needs --order x1,y1,...")
        order = [orderings.parse_vertex(t) for t in args.order.split(",")]
        res = orderings.verify_straight(g, order)
        out.update(ok=res.ok, crossing=None if res.ok else [
            [orderings.vertex_name(v) for v in e] for e in res.crossing])
    elif args.kind == "multichain":
        if args.start:
            layered = orderings.bfs_layers(g, orderings.parse_vertex(args.start))
            res = orderings.verify_multichain(g, layered)
            out.update(
                ok=res.ok, start=args.start, failing_layer=res.layer,
                layers=[[orderings.vertex_name(v) for v in layer] for layer in layered.layers],
                unreached=[orderings.vertex_name(v) for v in layered.unreached])
        else:
            starts = orderings.multichain_starts(g)
            out.update(ok=bool(starts), starts=[orderings.vertex_name(v) for v in starts])
    else:
        claw = orderings.find_subdivided_k13(g)
        out.update(ok=claw is None, witness=None if claw is None else {
            "center": orderings.vertex_name(claw.center),
            "middles": [orderings.vertex_name(v) for v in claw.middles],
            "leaves": [orderings.vertex_name(v) for v in claw.leaves]})
    _emit(out)
    _pretty(args, f"check {args.kind}: {'ok' if out['ok'] else 'fails'}")
    return EXIT_YES if out["ok"] else EXIT_NO


# -- gen -----------------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.kind == "convex":
        sys.stdout.write(io.dump_instance(
            gen.gen_convex_instance(args.seed, args.n, args.y, args.k, args.density)))
    elif args.kind == "biconvex":
        sys.stdout.write(io.dump_instance(gen.gen_biconvex_instance(
            args.seed, args.n, args.y, args.k, args.density, connected=args.connected)))
    else:
        sys.stdout.write(io.dump_target(
            gen.gen_target(args.seed, args.order, args.edge_density, args.loop_density)))
    return EXIT_YES


# -- difftest / bench ------------------------------------------------------------

def cmd_difftest(args) -> int:
    if args.exhaustive:
        report = harness.run_exhaustive(args.max_n, args.max_y, args.k, jobs=args.jobs)
    else:
        report = harness.run_difftest(args.count, args.seed, args.max_n, args.max_y, args.k,
                                      args.target, jobs=args.jobs)
    obj = report.to_obj()
    if args.out_dir:
        obj["counterexample_files"] = [str(p) for p in report.write_counterexamples(args.out_dir)]
    _emit(obj)
    _pretty(args, report.summary())
    return EXIT_DIVERGENCE if report.divergence else EXIT_YES


def cmd_bench(args) -> int:
    sizes = _int_list(args.sizes)
    rows = harness.run_bench(sizes, args.k, args.algo, seed=args.seed, density=args.density,
                             repeats=args.repeats, variant=args.variant)
    if args.json:
        timed = [r for r in rows if not r.refused]
        _emit({"algo": args.algo, "k": args.k, "rows": [
            {"size": r.size, "states": r.states,
             "millis": None if r.refused else round(r.millis, 3),
             "decision": None if r.decision is None else _verdict(r.decision),
             "refused": r.refused} for r in rows],
            "loglog_slope": harness.loglog_slope(rows) if len(timed) >= 2 else None})
    else:
        sys.stdout.write(harness.bench_csv(rows))
    _pretty(args, harness.bench_csv(rows))
    return EXIT_YES


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="convexcol", description=__doc__.splitlines()[0])
    p.add_argument("--pretty", action="store_true", help="human-readable output on stderr")
    # accepted after the subcommand too; SUPPRESS keeps it from resetting the top-level flag
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS,
                        help="human-readable output on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common], help="list k-coloring of an instance")
    s.add_argument("--input", required=True)
    s.add_argument("--algo", choices=("frontier", "color-dp", "brute"), default="frontier")
    s.add_argument("--variant", choices=colordp.VARIANTS, default="pseudocode-and")
    s.add_argument("--certificate", action="store_true")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("hcol", parents=[common], help="list H-coloring of an instance")
    s.add_argument("--input", required=True)
    s.add_argument("--target", required=True)
    s.add_argument("--algo", choices=("frontier", "usedset", "brute"), default="frontier")
    s.add_argument("--variant", choices=colordp.VARIANTS, default="pseudocode-and")
    s.add_argument("--certificate", action="store_true")
    s.set_defaults(func=cmd_hcol)

    s = sub.add_parser("trace", parents=[common], help="segment table snapshot")
    s.add_argument("--input", required=True)
    s.add_argument("--j", type=int, required=True)
    s.add_argument("--step", choices=colordp.STEPS, required=True)
    s.add_argument("--variant", choices=colordp.VARIANTS, default="off")
    s.set_defaults(func=cmd_trace)

    s = sub.add_parser("check", parents=[common], help="structural checks on a graph")
    s.add_argument("kind", choices=("convex", "biconvex", "straight", "multichain", "subd13"))
    s.add_argument("--input", required=True, help="graph.json or instance.json")
    s.add_argument("--order", help="X-order (convex) or full vertex order (straight)")
    s.add_argument("--x-order")
    s.add_argument("--y-order")
    s.add_argument("--start", help="start vertex for multichain, e.g. x1")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("gen", parents=[common], help="seeded generators")
    s.add_argument("kind", choices=("convex", "biconvex", "target"))
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--n", type=int, default=8)
    s.add_argument("--y", type=int, default=4, help="number of Y-vertices")
    s.add_argument("--k", type=int, default=3)
    s.add_argument("--density", type=float, default=0.6)
    s.add_argument("--connected", action="store_true")
    s.add_argument("--order", type=int, default=3)
    s.add_argument("--edge-density", type=float, default=0.5)
    s.add_argument("--loop-density", type=float, default=0.0)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("difftest", parents=[common], help="differential test against brute force")
    s.add_argument("--count", type=int, default=200)
    s.add_argument("--seed", type=int, default=7)
    s.add_argument("--max-n", type=int, default=7)
    s.add_argument("--max-y", type=int, default=4)
    s.add_argument("--k", type=int, default=3)
    s.add_argument("--target", choices=("complete", "random"), default="complete")
    s.add_argument("--exhaustive", action="store_true",
                   help="every instance up to --max-n/--max-y with k colors")
    s.add_argument("--out-dir", help="write one JSON file per counterexample")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_difftest)

    s = sub.add_parser("bench", parents=[common], help="timing table")
    s.add_argument("--sizes", default="100,1000,10000")
    s.add_argument("--k", type=int, default=3)
    s.add_argument("--algo", choices=harness.BENCH_ALGOS, default="frontier")
    s.add_argument("--variant", choices=colordp.VARIANTS, default="pseudocode-and")
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--density", type=float, default=1.0)
    s.add_argument("--repeats", type=int, default=5)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (io.FormatError, InvalidInstanceError, UsageError, harness.ConfigurationError,
            oracle.OracleRefusal, gen.GenerationError, IndexError, ValueError, OSError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
