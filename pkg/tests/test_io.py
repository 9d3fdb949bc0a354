import networkx as nx
import pytest
from hypothesis import given, settings

from regdef import io
from regdef.coloring import ColorAssignment
from regdef.constructions import build_theorem1, build_theorem4
from regdef.graph import complete_graph, cycle_graph, make_graph, plain_labels

from test_graph import graphs


def test_graph6_known_strings():
    assert io.encode_graph6(make_graph(plain_labels(1), [])) == b"@"
    assert io.encode_graph6(cycle_graph(4)) == b"Cl"
    assert io.encode_graph6(complete_graph(4)) == b"C~"


@given(graphs(max_n=12))
@settings(max_examples=100, deadline=None)
def test_graph6_round_trip_and_networkx(g):
    data = io.encode_graph6(g)
    assert io.decode_graph6(data).same_as(g)
    # networkx as an independent reference encoder
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.edge_ids())
    assert nx.to_graph6_bytes(ref, header=False).strip() == data


def test_graph6_long_header():
    g = cycle_graph(70)
    data = io.encode_graph6(g)
    assert data[0] == 126
    assert io.decode_graph6(data).same_as(g)


@pytest.mark.parametrize("bad", [b"", b"C", b"Cll", b"C\x20", b"~?"])
def test_graph6_malformed(bad):
    with pytest.raises(io.MalformedGraph6):
        io.decode_graph6(bad)


def test_json_round_trips(tmp_path):
    res = build_theorem4(6, 4, 2)
    io.write_graph(res.graph, tmp_path / "g.json")
    assert io.read_graph(tmp_path / "g.json").same_as(res.graph)
    io.write_coloring(res.defining_set, tmp_path / "s.json")
    assert io.read_coloring(tmp_path / "s.json") == res.defining_set
    io.write_trace(res.trace, tmp_path / "t.json")
    tr = io.read_trace(tmp_path / "t.json")
    assert tr.replay().same_as(res.graph)
    io.write_graph6(res.graph, tmp_path / "g.g6")
    assert io.read_graph(tmp_path / "g.g6").same_as(res.graph)


def test_bad_json(tmp_path):
    p = tmp_path / "g.json"
    p.write_text('{"n": 3, "labels": ["u1"], "edges": []}')
    with pytest.raises(io.FormatError):
        io.read_graph(p)
    p.write_text("{not json")
    with pytest.raises(io.FormatError):
        io.read_graph(p)
    with pytest.raises(io.FormatError):
        io.coloring_from_dict({"k": 2})


def test_dot_export():
    res = build_theorem1(5, 0)
    text = io.export_dot(res.graph, res.canonical_coloring, highlight=res.defining_set.keys())
    assert text.count("fillcolor") == 4
    assert text.count(" -- ") == res.graph.num_edges == 56
    node_lines = [ln for ln in text.splitlines() if ln.startswith('  "') and "--" not in ln]
    assert len(node_lines) == 14
    plain = io.export_dot(complete_graph(2))
    assert '"u1" -- "u2";' in plain and "fillcolor" not in plain
    colored = io.export_dot(complete_graph(2), ColorAssignment(2, {"u1": 1}))
    assert 'label="u1\\n1"' in colored and 'label="u2"' in colored
