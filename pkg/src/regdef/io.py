"""File formats: labeled JSON (native), graph6 (adjacency only) and DOT."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Optional

from .coloring import ColorAssignment
from .graph import Graph, GraphBuilder, VertexLabel, as_label, make_graph, plain_labels
from .trace import BaseFamily, ConstructionTrace, TraceStep


class FormatError(ValueError):
    pass


class MalformedGraph6(FormatError):
    pass


# ---------------------------------------------------------------------------
# JSON


def graph_to_dict(g: Graph) -> dict:
    return {
        "n": g.n,
        "labels": [str(lb) for lb in g.labels],
        "edges": [[str(a), str(b)] for a, b in g.edges()],
    }


def graph_from_dict(data: dict) -> Graph:
    try:
        labels = [VertexLabel.parse(s) for s in data["labels"]]
        edges = [(as_label(a), as_label(b)) for a, b in data["edges"]]
        n = int(data["n"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad graph JSON: {exc}") from exc
    if n != len(labels):
        raise FormatError(f"n={n} but {len(labels)} labels")
    return make_graph(labels, edges)


def coloring_to_dict(c: ColorAssignment) -> dict:
    return {"k": c.k, "colors": {str(v): col for v, col in c.items()}}


def coloring_from_dict(data: dict) -> ColorAssignment:
    try:
        return ColorAssignment(int(data["k"]), {VertexLabel.parse(v): int(c) for v, c in data["colors"].items()})
    except (KeyError, TypeError, AttributeError, ValueError) as exc:
        raise FormatError(f"bad coloring JSON: {exc}") from exc


def _edge_list(edges) -> list:
    return [[str(a), str(b)] for a, b in edges]


def trace_to_dict(tr: ConstructionTrace) -> dict:
    return {
        "base_family": tr.base_family.value,
        "params": dict(tr.params),
        "base": graph_to_dict(tr.base),
        "steps": [
            {
                "new_vertex": None if s.new_vertex is None else str(s.new_vertex),
                "removed_vertex": None if s.removed_vertex is None else str(s.removed_vertex),
                "deleted_edges": _edge_list(s.deleted_edges),
                "added_edges": _edge_list(s.added_edges),
                "note": s.note,
            }
            for s in tr.steps
        ],
    }


def trace_from_dict(data: dict) -> ConstructionTrace:
    def label_or_none(x):
        return None if x is None else VertexLabel.parse(x)

    def edges(xs):
        return [(VertexLabel.parse(a), VertexLabel.parse(b)) for a, b in xs]

    try:
        steps = [
            TraceStep(
                new_vertex=label_or_none(s.get("new_vertex")),
                deleted_edges=edges(s.get("deleted_edges", [])),
                added_edges=edges(s.get("added_edges", [])),
                removed_vertex=label_or_none(s.get("removed_vertex")),
                note=s.get("note", ""),
            )
            for s in data["steps"]
        ]
        return ConstructionTrace(
            BaseFamily(data["base_family"]),
            {k: int(v) for k, v in data["params"].items()},
            graph_from_dict(data["base"]),
            steps,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad trace JSON: {exc}") from exc


def dump_json(obj: dict, path) -> None:
    Path(path).write_text(json.dumps(obj, indent=1) + "\n")


def load_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def write_graph(g: Graph, path) -> None:
    dump_json(graph_to_dict(g), path)


def read_graph(path) -> Graph:
    path = Path(path)
    if path.suffix == ".g6":
        return read_graph6(path)
    return graph_from_dict(load_json(path))


def write_coloring(c: ColorAssignment, path) -> None:
    dump_json(coloring_to_dict(c), path)


def read_coloring(path) -> ColorAssignment:
    return coloring_from_dict(load_json(path))


def write_trace(tr: ConstructionTrace, path) -> None:
    dump_json(trace_to_dict(tr), path)


def read_trace(path) -> ConstructionTrace:
    return trace_from_dict(load_json(path))


# ---------------------------------------------------------------------------
# graph6


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def encode_graph6(g: Graph) -> bytes:
    """graph6 bytes (no header, no newline). Bits run over the upper triangle
    column by column: (0,1), (0,2), (1,2), (0,3), ..."""
    bits = [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + int("".join(map(str, bits[p : p + 6])), 2) for p in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def decode_graph6(data, labels: Optional[Iterable] = None) -> Graph:
    """Inverse of encode_graph6. Vertices get labels u1..un unless ``labels`` is
    given (graph6 itself carries none)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = bytes(data).strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data or any(not 63 <= ch <= 126 for ch in data):
        raise MalformedGraph6("graph6 bytes must lie in 63..126")
    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    elif len(data) >= 4 and data[1] != 126:
        n = sum((data[1 + p] - 63) << (6 * (2 - p)) for p in range(3))
        body = data[4:]
    elif len(data) >= 8:
        n = sum((data[2 + p] - 63) << (6 * (5 - p)) for p in range(6))
        body = data[8:]
    else:
        raise MalformedGraph6("truncated size header")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} body bytes for n={n}, got {len(body)}")
    if any(ch > 126 for ch in body):
        raise MalformedGraph6("body byte out of range")
    bits = []
    for ch in body:
        bits.extend((ch - 63) >> s & 1 for s in range(5, -1, -1))
    labels = plain_labels(n) if labels is None else [as_label(x) for x in labels]
    if len(labels) != n:
        raise MalformedGraph6(f"{len(labels)} labels for {n} vertices")
    b = GraphBuilder()
    for lb in labels:
        b.add_vertex(lb)
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                b.add_edge(labels[i], labels[j])
            pos += 1
    return b.freeze()


def write_graph6(g: Graph, path) -> None:
    """Writes ``path`` (.g6) plus a ``.labels.json`` sidecar holding the labels."""
    path = Path(path)
    path.write_bytes(encode_graph6(g) + b"\n")
    dump_json({"labels": [str(lb) for lb in g.labels]}, path.with_suffix(".labels.json"))


def read_graph6(path) -> Graph:
    path = Path(path)
    side = path.with_suffix(".labels.json")
    labels = load_json(side)["labels"] if side.exists() else None
    return decode_graph6(path.read_bytes(), labels)


# ---------------------------------------------------------------------------
# DOT


def export_dot(
    g: Graph,
    coloring: Optional[ColorAssignment] = None,
    highlight: Iterable = (),
    name: str = "G",
) -> str:
    """Undirected DOT; ``highlight`` vertices are drawn filled, colored vertices
    carry their color index in the node label."""
    marked = {as_label(v) for v in highlight}
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for lb in g.labels:
        text = str(lb)
        attrs = []
        if coloring is not None and lb in coloring:
            attrs.append(f'label="{text}\\n{coloring[lb]}"')
        else:
            attrs.append(f'label="{text}"')
        if lb in marked:
            attrs.append('style=filled fillcolor="black" fontcolor="white"')
        lines.append(f'  "{text}" [{" ".join(attrs)}];')
    for a, b in g.edges():
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
