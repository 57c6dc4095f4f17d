"""JSON readers and writers for instances, targets, graphs and colorings.

Writers emit a canonical compact form (fixed key order, sorted color lists,
trailing newline), so ``dump_x(load_x(doc)) == canonical(doc)``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .model import BipartiteGraph, Coloring, ConvexInstance, TargetGraph, YVertex


class FormatError(ValueError):
    """Malformed document; ``location`` is a JSON path such as ``$.y[2].a``."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location


def _decode(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None


def _obj(value: Any, where: str, required: tuple[str, ...], optional: tuple[str, ...] = ()) -> dict:
    if not isinstance(value, dict):
        raise FormatError(where, "expected an object")
    for key in value:
        if key not in required and key not in optional:
            raise FormatError(f"{where}.{key}", f"unknown field {key!r}")
    for key in required:
        if key not in value:
            raise FormatError(f"{where}.{key}", f"missing field {key!r}")
    return value


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(where, f"expected an integer, got {value!r}")
    return value


def _int_list(value: Any, where: str) -> list[int]:
    if not isinstance(value, list):
        raise FormatError(where, "expected a list")
    return [_int(v, f"{where}[{i}]") for i, v in enumerate(value)]


def _color_set(value: Any, where: str) -> frozenset[int]:
    items = _int_list(value, where)
    if len(set(items)) != len(items):
        raise FormatError(where, "duplicate color")
    return frozenset(items)


def _dump(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


# -- instance ---------------------------------------------------------------

def instance_to_obj(inst: ConvexInstance) -> dict:
    obj: dict[str, Any] = {
        "k": inst.k,
        "x_lists": [sorted(c) for c in inst.x_lists],
        "y": [{"a": v.a, "b": v.b, "list": sorted(v.colors)} for v in inst.y],
    }
    if inst.y_order is not None:
        obj["y_order"] = list(inst.y_order)
    if inst.generator is not None:
        obj["generator"] = inst.generator
    return obj


def instance_from_obj(obj: Any, where: str = "$") -> ConvexInstance:
    obj = _obj(obj, where, ("k", "x_lists", "y"), ("y_order", "generator"))
    k = _int(obj["k"], f"{where}.k")
    if not isinstance(obj["x_lists"], list):
        raise FormatError(f"{where}.x_lists", "expected a list")
    x_lists = tuple(
        _color_set(c, f"{where}.x_lists[{i}]") for i, c in enumerate(obj["x_lists"])
    )
    if not isinstance(obj["y"], list):
        raise FormatError(f"{where}.y", "expected a list")
    ys = []
    for j, item in enumerate(obj["y"]):
        at = f"{where}.y[{j}]"
        item = _obj(item, at, ("a", "b", "list"))
        ys.append(YVertex(_int(item["a"], f"{at}.a"), _int(item["b"], f"{at}.b"),
                          _color_set(item["list"], f"{at}.list")))
    y_order = None
    if "y_order" in obj:
        y_order = tuple(_int_list(obj["y_order"], f"{where}.y_order"))
    generator = obj.get("generator")
    if generator is not None and not isinstance(generator, str):
        raise FormatError(f"{where}.generator", "expected a string")
    return ConvexInstance(k, x_lists, tuple(ys), generator=generator, y_order=y_order)


def load_instance(text: str) -> ConvexInstance:
    return instance_from_obj(_decode(text))


def dump_instance(inst: ConvexInstance) -> str:
    return _dump(instance_to_obj(inst))


# -- target -----------------------------------------------------------------

def target_to_obj(h: TargetGraph) -> dict:
    return {"order": h.order, "edges": [list(e) for e in sorted(h.edges)], "loops": sorted(h.loops)}


def load_target(text: str) -> TargetGraph:
    obj = _obj(_decode(text), "$", ("order", "edges"), ("loops",))
    order = _int(obj["order"], "$.order")
    if not isinstance(obj["edges"], list):
        raise FormatError("$.edges", "expected a list")
    edges = []
    for i, e in enumerate(obj["edges"]):
        pair = _int_list(e, f"$.edges[{i}]")
        if len(pair) != 2:
            raise FormatError(f"$.edges[{i}]", "expected a pair")
        edges.append(tuple(pair))
    loops = _int_list(obj.get("loops", []), "$.loops")
    try:
        return TargetGraph(order, frozenset(edges), frozenset(loops))
    except ValueError as exc:
        raise FormatError("$", str(exc)) from None


def dump_target(h: TargetGraph) -> str:
    return _dump(target_to_obj(h))


# -- graph ------------------------------------------------------------------

def load_graph(text: str) -> BipartiteGraph:
    obj = _obj(_decode(text), "$", ("x_count", "y_adj"))
    x_count = _int(obj["x_count"], "$.x_count")
    if not isinstance(obj["y_adj"], list):
        raise FormatError("$.y_adj", "expected a list")
    adj = tuple(tuple(_int_list(a, f"$.y_adj[{j}]")) for j, a in enumerate(obj["y_adj"]))
    try:
        return BipartiteGraph(x_count, adj)
    except ValueError as exc:
        raise FormatError("$.y_adj", str(exc)) from None


def dump_graph(g: BipartiteGraph) -> str:
    return _dump({"x_count": g.x_count, "y_adj": [list(a) for a in g.y_adj]})


# -- coloring ---------------------------------------------------------------

def coloring_to_obj(col: Coloring) -> dict:
    return {"x": list(col.x), "y": list(col.y)}


def load_coloring(text: str) -> Coloring:
    obj = _obj(_decode(text), "$", ("x", "y"))
    return Coloring(tuple(_int_list(obj["x"], "$.x")), tuple(_int_list(obj["y"], "$.y")))


def dump_coloring(col: Coloring) -> str:
    return _dump(coloring_to_obj(col))


def read_text(path: str | Path) -> str:
    return Path(path).read_text(encoding="utf-8")


def load_graph_or_instance(text: str) -> BipartiteGraph:
    """Accept either graph.json or instance.json (expanded to adjacency lists)."""
    from .model import to_bipartite_graph

    obj = _decode(text)
    if isinstance(obj, dict) and "y_adj" in obj:
        return load_graph(text)
    return to_bipartite_graph(instance_from_obj(obj))
