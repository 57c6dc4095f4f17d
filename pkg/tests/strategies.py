from hypothesis import strategies as st

from convexcol.model import BipartiteGraph, ConvexInstance, TargetGraph, YVertex


@st.composite
def instances(draw, max_n=8, max_y=5, max_k=4, k=None):
    k = draw(st.integers(1, max_k)) if k is None else k
    n = draw(st.integers(1, max_n))
    colors = st.frozensets(st.integers(1, k))
    x_lists = draw(st.lists(colors, min_size=n, max_size=n))
    ys = []
    for _ in range(draw(st.integers(0, max_y))):
        a = draw(st.integers(1, n))
        b = draw(st.integers(a, n))
        ys.append(YVertex(a, b, draw(colors)))
    return ConvexInstance(k, x_lists, ys)


@st.composite
def targets(draw, max_order=4):
    order = draw(st.integers(1, max_order))
    pairs = [(u, v) for u in range(1, order + 1) for v in range(u + 1, order + 1)]
    edges = draw(st.frozensets(st.sampled_from(pairs))) if pairs else frozenset()
    loops = draw(st.frozensets(st.integers(1, order)))
    return TargetGraph(order, edges, loops)


@st.composite
def instances_with_target(draw, max_n=6, max_y=4):
    h = draw(targets())
    return draw(instances(max_n=max_n, max_y=max_y, max_k=h.order, k=h.order)), h


@st.composite
def bipartite_graphs(draw, max_x=6, max_y=5):
    x_count = draw(st.integers(1, max_x))
    adj = draw(st.lists(st.frozensets(st.integers(1, x_count)), max_size=max_y))
    return BipartiteGraph(x_count, [sorted(a) for a in adj])
