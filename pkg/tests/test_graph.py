import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regdef.graph import (
    DuplicateLabel,
    EdgeError,
    Family,
    GraphBuilder,
    LoopEdge,
    UnknownEndpoint,
    VertexLabel,
    complete_graph,
    cycle_graph,
    is_regular,
    lab,
    make_graph,
    plain_labels,
)
from regdef.trace import BaseFamily, ConstructionTrace, TraceStep


def test_label_round_trip():
    for text in ["u1", "v12", "w3'", "x1", "y7"]:
        assert str(lab(text)) == text
    assert lab("u2'") == VertexLabel(Family.U, 2, True)
    with pytest.raises(ValueError):
        lab("z1")
    with pytest.raises(ValueError):
        lab("u")


def test_complete_and_cycle():
    k5 = complete_graph(5)
    assert k5.num_edges == 10 and is_regular(k5, 4)
    c6 = cycle_graph(6)
    assert is_regular(c6, 2) and c6.has_edge("u6", "u1") and not c6.has_edge("u1", "u3")


def test_builder_errors():
    b = GraphBuilder()
    b.add_vertex("u1")
    b.add_vertex("u2")
    with pytest.raises(DuplicateLabel):
        b.add_vertex("u1")
    with pytest.raises(LoopEdge):
        b.add_edge("u1", "u1")
    with pytest.raises(UnknownEndpoint):
        b.add_edge("u1", "u9")
    b.add_edge("u1", "u2")
    with pytest.raises(EdgeError):
        b.add_edge("u2", "u1")
    b.delete_edge("u1", "u2")
    with pytest.raises(EdgeError):
        b.delete_edge("u1", "u2")


def test_remove_vertex_reindexes():
    b = GraphBuilder.from_graph(complete_graph(4))
    gone = b.remove_vertex("u2")
    assert len(gone) == 3
    g = b.freeze()
    assert [str(x) for x in g.labels] == ["u1", "u3", "u4"]
    assert g.num_edges == 3 and g.has_edge("u1", "u4")


def test_trace_rejects_overlapping_step():
    u1, u2 = lab("u1"), lab("u2")
    step = TraceStep(new_vertex=None, deleted_edges=[(u1, u2)], added_edges=[(u2, u1)])
    with pytest.raises(ValueError):
        step.check()


def test_trace_replay_small():
    base = make_graph(plain_labels(3), [("u1", "u2"), ("u2", "u3")])
    x = lab("x1")
    steps = [TraceStep(new_vertex=x, deleted_edges=[(lab("u1"), lab("u2"))], added_edges=[(x, lab("u1")), (x, lab("u2"))])]
    tr = ConstructionTrace(BaseFamily.GLK, {}, base, steps)
    g = tr.replay()
    assert g.n == 4 and g.num_edges == 3 and not g.has_edge("u1", "u2")
    assert tr.new_vertex_columns() == [(x, [(lab("u1"), lab("u2"))])]


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    labels = plain_labels(n)
    return make_graph(labels, [(labels[i], labels[j]) for (i, j), keep in zip(pairs, mask) if keep])


@given(graphs())
@settings(max_examples=100, deadline=None)
def test_handshake_and_symmetry(g):
    g.audit()
    assert sum(g.degrees()) == 2 * g.num_edges
    for a, b in g.edges():
        assert g.has_edge(b, a)
    assert len(g.edge_set()) == g.num_edges
