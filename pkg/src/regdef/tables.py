"""Golden deleted-edge tables for k=7 and k=8, and their regeneration.

The expected data is transcribed verbatim (edge ``u_1u_{2'}`` is written
``u1u2'``). Both sides are put in the same canonical form before comparing:
endpoints ordered by vertex id in the built graph, edges sorted per column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .constructions import build_theorem2, build_theorem3
from .graph import Graph, VertexLabel

TABLE_1 = {
    "x1": ["u1u1'", "u2u2'", "u3u3'", "v1v1'", "v2v2'", "v3v3'"],
    "x2": ["u1u2'", "u2u3'", "u3u1'", "v1v2'", "v2v3'", "v3v1'"],
    "x3": ["u1u3'", "u2u1'", "u3u2'", "v1v3'", "v2v1'", "v3v2'"],
    "y1": ["u2'u3'", "v2v3", "x1v1", "x2u2", "x3u3", "v7u1"],
    "y2": ["u1'u3'", "v1v3", "x1v2", "x2u3", "x3u1", "v7u2"],
}

TABLE_2 = {
    "x1": ["u1u2'", "u2u3'", "u4u1'", "v1v1'", "v2v2'", "v3v3'", "u3v4"],
    "x2": ["u1u3'", "u3u1'", "u4u2'", "v1v2'", "v2v3'", "v4v1'", "u2v3"],
    "x3": ["u2u1'", "u3u2'", "u4u3'", "v1v3'", "v3v1'", "v4v2'", "u1v2"],
    "y1": ["u2'u3'", "v1v4", "v2'v3", "v2v4'", "x1u2", "x2u3", "x3u4"],
    "y2": ["u1'u3'", "v2v4", "v1v3", "v3'v4'", "x1u3", "x2u4", "x3u1"],
    "y3": ["u1'u2'", "v3'v4", "v1'v2", "v1v4'", "x1u4", "x2u1", "x3u2"],
}

TABLES = {1: (7, TABLE_1), 2: (8, TABLE_2)}

_TOKEN = re.compile(r"[uvwxy]\d+'?")


def parse_edge(text: str) -> tuple[VertexLabel, VertexLabel]:
    parts = _TOKEN.findall(text)
    if len(parts) != 2 or "".join(parts) != text:
        raise ValueError(f"cannot read edge {text!r}")
    return VertexLabel.parse(parts[0]), VertexLabel.parse(parts[1])


def canonical_column(g: Graph, edges) -> list[str]:
    out = []
    for a, b in edges:
        a, b = sorted((a, b), key=g.index)
        out.append(f"{a}{b}")
    return sorted(out, key=lambda e: [g.index(v) for v in parse_edge(e)])


@dataclass
class ColumnDiff:
    vertex: str
    missing: list[str] = field(default_factory=list)
    extra: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extra


@dataclass
class ReproReport:
    table: int
    expected: dict[str, list[str]]
    produced: dict[str, list[str]]
    diffs: list[ColumnDiff]

    @property
    def ok(self) -> bool:
        return list(self.expected) == list(self.produced) and all(d.ok for d in self.diffs)

    def lines(self) -> list[str]:
        out = []
        for d in self.diffs:
            if d.ok:
                out.append(f"{d.vertex}: ok ({len(self.expected[d.vertex])} edges)")
                continue
            out.append(f"{d.vertex}: DIFF")
            out += [f"  - {e}" for e in d.missing]
            out += [f"  + {e}" for e in d.extra]
        if list(self.expected) != list(self.produced):
            out.append(f"columns: expected {list(self.expected)}, got {list(self.produced)}")
        matched = sum(d.ok for d in self.diffs)
        out.append(f"table {self.table}: {matched}/{len(self.expected)} columns matched")
        return out


def reproduce(table: int) -> ReproReport:
    if table not in TABLES:
        raise KeyError(f"no table {table}; choose from {sorted(TABLES)}")
    k, expected_raw = TABLES[table]
    builder = build_theorem2 if table == 1 else build_theorem3
    res = builder(k, len(expected_raw))
    g = res.graph
    produced = {str(v): canonical_column(g, edges) for v, edges in res.trace.new_vertex_columns()}
    expected = {col: canonical_column(g, map(parse_edge, edges)) for col, edges in expected_raw.items()}
    diffs = []
    for col, want in expected.items():
        got = produced.get(col, [])
        diffs.append(
            ColumnDiff(col, missing=[e for e in want if e not in got], extra=[e for e in got if e not in want])
        )
    return ReproReport(table, expected, produced, diffs)
