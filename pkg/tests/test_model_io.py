import json

import pytest
from hypothesis import given, settings

from convexcol import io
from convexcol.model import (BipartiteGraph, Coloring, ConvexInstance, InvalidInstanceError,
                             TargetGraph, YVertex, complete_target, from_bipartite_graph,
                             intervals_of, require_valid, to_bipartite_graph, validate_instance,
                             verify_coloring)

from strategies import instances


def small(k=2):
    return ConvexInstance(k, [{1, 2}, {1}, {2}], [(1, 2, {2}), (2, 3, {1, 2})])


def test_instance_coerces_and_exposes_n():
    inst = small()
    assert inst.n == 3
    assert inst.x_list(2) == frozenset({1})
    assert inst.y[0] == YVertex(1, 2, frozenset({2}))
    assert inst.y[0].covers(2) and not inst.y[0].covers(3)


def test_validate_accepts_good_instance():
    assert validate_instance(small()).ok


@pytest.mark.parametrize("inst, fragment", [
    (ConvexInstance(2, [{1}], [(1, 0, {1})]), "interval reversed"),
    (ConvexInstance(2, [{1}], [(1, 2, {1})]), "outside 1..1"),
    (ConvexInstance(2, [{3}]), "x_lists[1]: color 3 outside 1..2"),
    (ConvexInstance(2, [{1}], [(1, 1, {0})]), "y[1].list: color 0"),
    (ConvexInstance(0, [set()]), "k: must be a positive integer"),
    (ConvexInstance(2, []), "at least one X-vertex"),
    (ConvexInstance(2, [{1}], [(1, 1, {1})], y_order=(2,)), "y_order"),
])
def test_validate_reports_violations(inst, fragment):
    report = validate_instance(inst)
    assert not report.ok
    assert any(fragment in v for v in report.violations)
    with pytest.raises(InvalidInstanceError):
        require_valid(inst)


def test_empty_lists_are_valid():
    assert validate_instance(ConvexInstance(2, [set()], [(1, 1, set())])).ok


def test_target_graph_normalizes_and_rejects():
    h = TargetGraph(3, frozenset({(2, 1)}), frozenset({3}))
    assert h.edges == {(1, 2)}
    assert h.adjacent(2, 1) and h.adjacent(3, 3) and not h.adjacent(1, 1)
    with pytest.raises(ValueError):
        TargetGraph(2, frozenset({(1, 1)}))
    with pytest.raises(ValueError):
        TargetGraph(2, frozenset({(1, 3)}))
    assert complete_target(4).is_complete()
    assert not h.is_complete()


def test_verify_coloring():
    inst = ConvexInstance(2, [{1, 2}, {1}, {2}], [(1, 2, {2}), (3, 3, {1, 2})])
    k2 = complete_target(2)
    assert verify_coloring(inst, k2, Coloring((1, 1, 2), (2, 1)))
    assert not verify_coloring(inst, k2, Coloring((2, 1, 2), (2, 1)))  # x1-y1 both 2
    assert not verify_coloring(inst, k2, Coloring((1, 2, 2), (2, 1)))  # x2 off its list
    assert not verify_coloring(inst, k2, Coloring((1, 1, 2), (1, 1)))  # y1 off its list
    with pytest.raises(ValueError):
        verify_coloring(inst, k2, Coloring((1,), ()))


def test_bipartite_graph_round_trip():
    inst = small()
    g = to_bipartite_graph(inst)
    assert g.y_adj == ((1, 2), (2, 3))
    assert g.x_adj() == ((1,), (1, 2), (2,))
    assert g.edges() == [(1, 1), (2, 1), (2, 2), (3, 2)]
    assert intervals_of(g) == [(1, 2), (2, 3)]
    back = from_bipartite_graph(g, 2, inst.x_lists, [v.colors for v in inst.y])
    assert back == inst
    assert intervals_of(BipartiteGraph(3, [[1, 3]])) is None
    with pytest.raises(ValueError):
        from_bipartite_graph(BipartiteGraph(3, [[1, 3]]), 2, [{1}] * 3, [{1}])
    with pytest.raises(ValueError):
        BipartiteGraph(2, [[3]])


def test_instance_json_canonical(worked):
    text = io.dump_instance(worked)
    assert text.endswith("\n") and " " not in text
    assert io.load_instance(text) == worked
    scrambled = json.dumps({"y": [{"list": [2, 1], "b": 2, "a": 1}], "k": 2,
                            "x_lists": [[2, 1], [1]]}, indent=2)
    assert io.dump_instance(io.load_instance(scrambled)) == \
        '{"k":2,"x_lists":[[1,2],[1]],"y":[{"a":1,"b":2,"list":[1,2]}]}\n'


def test_optional_fields_survive():
    inst = ConvexInstance(2, [{1}], [(1, 1, {2})], generator="g", y_order=(1,))
    again = io.load_instance(io.dump_instance(inst))
    assert again.generator == "g" and again.y_order == (1,)


@pytest.mark.parametrize("doc, location", [
    ('{"k":2,"x_lists":[[1]],"y":[],"extra":1}', "$.extra"),
    ('{"k":2,"x_lists":[[1]]}', "$.y"),
    ('{"k":"2","x_lists":[[1]],"y":[]}', "$.k"),
    ('{"k":2,"x_lists":[[1,1]],"y":[]}', "$.x_lists[0]"),
    ('{"k":2,"x_lists":[[1]],"y":[{"a":1,"b":1}]}', "$.y[0].list"),
    ('{"k":2,"x_lists":[[true]],"y":[]}', "$.x_lists[0][0]"),
    ('{"k":2,', "line 1"),
])
def test_format_errors_carry_location(doc, location):
    with pytest.raises(io.FormatError) as info:
        io.load_instance(doc)
    assert info.value.location.startswith(location)


def test_target_graph_and_coloring_io():
    h = io.load_target('{"order":3,"edges":[[2,1],[3,2]],"loops":[1]}')
    assert io.dump_target(h) == '{"order":3,"edges":[[1,2],[2,3]],"loops":[1]}\n'
    assert io.load_target('{"order":2,"edges":[]}').loops == frozenset()
    with pytest.raises(io.FormatError):
        io.load_target('{"order":2,"edges":[[1,2,3]]}')
    with pytest.raises(io.FormatError):
        io.load_target('{"order":2,"edges":[[1,5]]}')
    g = io.load_graph('{"x_count":3,"y_adj":[[3,1]]}')
    assert io.dump_graph(g) == '{"x_count":3,"y_adj":[[1,3]]}\n'
    with pytest.raises(io.FormatError):
        io.load_graph('{"x_count":1,"y_adj":[[2]]}')
    col = Coloring((1, 2), (3,))
    assert io.load_coloring(io.dump_coloring(col)) == col


def test_graph_or_instance(worked):
    g = io.load_graph_or_instance(io.dump_instance(worked))
    assert g == to_bipartite_graph(worked)
    assert io.load_graph_or_instance(io.dump_graph(g)) == g


@settings(max_examples=200, deadline=None)
@given(instances())
def test_instance_round_trip_property(inst):
    assert validate_instance(inst).ok
    text = io.dump_instance(inst)
    assert io.load_instance(text) == inst
    assert io.dump_instance(io.load_instance(text)) == text
