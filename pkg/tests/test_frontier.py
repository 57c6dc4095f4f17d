from itertools import product

import pytest
from hypothesis import given, settings

from convexcol.frontier import solve_frontier, state_census
from convexcol.model import ConvexInstance, TargetGraph, complete_target, verify_coloring
from convexcol.oracle import brute_force_instance

from strategies import instances, instances_with_target


def naive_census(inst, h):
    """Distinct normalized reach vectors over every partial coloring valid on x_1..x_i."""
    out = []
    for i in range(1, inst.n + 1):
        started = [t for t, v in enumerate(inst.y) if v.a <= i]
        states = set()
        for colors in product(*(sorted(inst.y[t].colors) for t in started)):
            ok = all(
                any(all(h.adjacent(cx, c) for t, c in zip(started, colors) if inst.y[t].covers(x))
                    for cx in inst.x_list(x))
                for x in range(1, i + 1))
            if ok:
                reach = [0] * h.order
                for t, c in zip(started, colors):
                    reach[c - 1] = max(reach[c - 1], inst.y[t].b)
                states.add(tuple(r if r > i else 0 for r in reach))
        out.append(len(states))
        if not states:
            return out + [0] * (inst.n - i)
    return out


def test_worked_example_yes_with_certificate(worked):
    res = solve_frontier(worked)
    assert res.decision
    assert verify_coloring(worked, complete_target(3), res.coloring)
    assert res.coloring.y == (2, 2, 3, 2)


def test_worked_example_census(worked):
    # frozen from naive_census; dominance only shrinks position 5
    assert state_census(worked) == [2, 2, 2, 3, 3, 2, 2, 1, 1]
    assert naive_census(worked, complete_target(3)) == state_census(worked)
    assert state_census(worked, dominance=True) == [2, 2, 2, 3, 2, 2, 2, 1, 1]


def test_small_cases():
    assert not solve_frontier(ConvexInstance(2, [set()])).decision
    assert solve_frontier(ConvexInstance(1, [{1}])).coloring.x == (1,)
    # a Y-vertex with one color forbids it on all of its interval
    res = solve_frontier(ConvexInstance(2, [{1, 2}, {1, 2}, {1}], [(1, 2, {1})]))
    assert res.decision and res.coloring.x[:2] == (2, 2)
    no = solve_frontier(ConvexInstance(2, [{1, 2}] * 3, [(1, 3, {1}), (2, 2, {2})]))
    assert not no.decision and no.coloring is None and no.census == [1, 0, 0]
    assert solve_frontier(ConvexInstance(2, [{1}], [(1, 1, {2})]), certificate=False).coloring is None


def test_target_checks():
    with pytest.raises(ValueError):
        solve_frontier(ConvexInstance(3, [{1}]), complete_target(2))
    looped = TargetGraph(1, frozenset(), frozenset({1}))
    assert solve_frontier(ConvexInstance(1, [{1}], [(1, 1, {1})]), looped).decision
    assert not solve_frontier(ConvexInstance(1, [{1}], [(1, 1, {1})])).decision


@settings(max_examples=400, deadline=None)
@given(instances(max_n=7, max_y=5, max_k=3))
def test_matches_brute_force_on_k_coloring(inst):
    res = solve_frontier(inst)
    assert res.decision == brute_force_instance(inst).decision
    h = complete_target(inst.k)
    if res.decision:
        assert verify_coloring(inst, h, res.coloring)
    assert solve_frontier(inst, h).decision == res.decision


@settings(max_examples=300, deadline=None)
@given(instances_with_target())
def test_matches_brute_force_on_h_coloring(case):
    inst, h = case
    res = solve_frontier(inst, h)
    assert res.decision == brute_force_instance(inst, h).decision
    if res.decision:
        assert verify_coloring(inst, h, res.coloring)


@settings(max_examples=150, deadline=None)
@given(instances_with_target(max_n=5, max_y=3))
def test_census_matches_naive_enumeration(case):
    inst, h = case
    assert state_census(inst, h) == naive_census(inst, h)
    pruned = state_census(inst, h, dominance=True)
    assert all(p <= c for p, c in zip(pruned, state_census(inst, h)))
