"""Labeled simple graphs stored as adjacency bitrows."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Sequence


class Family(str, Enum):
    U = "u"
    V = "v"
    W = "w"
    X = "x"
    Y = "y"


class GraphError(ValueError):
    pass


class DuplicateLabel(GraphError):
    pass


class UnknownEndpoint(GraphError):
    pass


class LoopEdge(GraphError):
    pass


class EdgeError(GraphError):
    """Adding an existing edge or deleting a missing one."""


_LABEL_RE = re.compile(r"^([uvwxy])(\d+)(')?$")


@dataclass(frozen=True, order=True)
class VertexLabel:
    family: Family
    index: int
    primed: bool = False

    def __post_init__(self):
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family(self.family))
        if self.index < 0:
            raise ValueError(f"negative vertex index {self.index}")

    def __str__(self) -> str:
        return f"{self.family.value}{self.index}{chr(39) if self.primed else ''}"

    def __repr__(self) -> str:
        return f"VertexLabel({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "VertexLabel":
        m = _LABEL_RE.match(text.strip())
        if m is None:
            raise ValueError(f"not a vertex label: {text!r}")
        return cls(Family(m.group(1)), int(m.group(2)), m.group(3) is not None)


def lab(text: str) -> VertexLabel:
    """Shorthand: ``lab("u2'")``."""
    return VertexLabel.parse(text)


def as_label(x) -> VertexLabel:
    return x if isinstance(x, VertexLabel) else VertexLabel.parse(x)


def plain_labels(n: int, family: Family = Family.U) -> list[VertexLabel]:
    """``u1..un``; the default naming for graphs that are not constructions."""
    return [VertexLabel(family, i) for i in range(1, n + 1)]


Edge = tuple[VertexLabel, VertexLabel]


@dataclass(frozen=True)
class Graph:
    labels: tuple[VertexLabel, ...]
    adj: tuple[int, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        index = {lb: i for i, lb in enumerate(self.labels)}
        if len(index) != len(self.labels):
            raise DuplicateLabel("duplicate vertex label")
        object.__setattr__(self, "_index", index)

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        try:
            return self._index[as_label(label)]
        except KeyError:
            raise UnknownEndpoint(f"no vertex {label}") from None

    def __contains__(self, label) -> bool:
        return as_label(label) in self._index

    def has_edge(self, a, b) -> bool:
        return bool(self.adj[self.index(a)] >> self.index(b) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def edge_ids(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.adj):
            for j in self.neighbors(i):
                if j > i:
                    yield i, j

    def edges(self) -> list[Edge]:
        return [(self.labels[i], self.labels[j]) for i, j in self.edge_ids()]

    def edge_set(self) -> frozenset[frozenset[VertexLabel]]:
        return frozenset(frozenset(e) for e in self.edges())

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def audit(self) -> None:
        """Raise GraphError unless the bitrows describe a simple graph."""
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {i} points past vertex {self.n - 1}")
            if row >> i & 1:
                raise LoopEdge(f"loop at {self.labels[i]}")
            for j in self.neighbors(i):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"asymmetric pair {self.labels[i]}, {self.labels[j]}")

    def without_edges(self, edges: Iterable) -> "Graph":
        b = GraphBuilder.from_graph(self)
        for a, c in edges:
            b.delete_edge(a, c)
        return b.freeze()

    def same_as(self, other: "Graph") -> bool:
        """Same labels in the same order and the same edge set."""
        return self.labels == other.labels and self.adj == other.adj

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


def make_graph(labels: Sequence, edges: Iterable) -> Graph:
    b = GraphBuilder()
    for lb in labels:
        b.add_vertex(as_label(lb))
    for a, c in edges:
        b.add_edge(a, c, strict=False)
    return b.freeze()


def is_regular(g: Graph, r: int) -> bool:
    if r < 0:
        raise ValueError("r must be non-negative")
    return all(d == r for d in g.degrees())


def complete_graph(n: int, family: Family = Family.U) -> Graph:
    labels = plain_labels(n, family)
    return make_graph(labels, [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int, family: Family = Family.U) -> Graph:
    labels = plain_labels(n, family)
    return make_graph(labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)])


class GraphBuilder:
    """Mutable counterpart of Graph, used inside constructions and trace replay."""

    def __init__(self):
        self.labels: list[VertexLabel] = []
        self.rows: list[int] = []
        self._index: dict[VertexLabel, int] = {}

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphBuilder":
        b = cls()
        b.labels = list(g.labels)
        b.rows = list(g.adj)
        b._index = {lb: i for i, lb in enumerate(b.labels)}
        return b

    def __contains__(self, label) -> bool:
        return as_label(label) in self._index

    def index(self, label) -> int:
        try:
            return self._index[as_label(label)]
        except KeyError:
            raise UnknownEndpoint(f"no vertex {label}") from None

    def add_vertex(self, label: VertexLabel) -> int:
        label = as_label(label)
        if label in self._index:
            raise DuplicateLabel(f"vertex {label} already present")
        self._index[label] = len(self.labels)
        self.labels.append(label)
        self.rows.append(0)
        return self._index[label]

    def remove_vertex(self, label) -> list[Edge]:
        """Drop a vertex; returns the edges it took with it."""
        v = self.index(label)
        gone = [(self.labels[v], self.labels[w]) for w in _bits(self.rows[v])]
        for w in _bits(self.rows[v]):
            self.rows[w] &= ~(1 << v)
        del self.labels[v]
        del self.rows[v]
        low = (1 << v) - 1
        self.rows = [(row & low) | ((row >> (v + 1)) << v) for row in self.rows]
        self._index = {lb: i for i, lb in enumerate(self.labels)}
        return gone

    def has_edge(self, a, c) -> bool:
        return bool(self.rows[self.index(a)] >> self.index(c) & 1)

    def add_edge(self, a, c, strict: bool = True) -> None:
        i, j = self.index(a), self.index(c)
        if i == j:
            raise LoopEdge(f"loop at {self.labels[i]}")
        if strict and self.rows[i] >> j & 1:
            raise EdgeError(f"edge {self.labels[i]}{self.labels[j]} already present")
        self.rows[i] |= 1 << j
        self.rows[j] |= 1 << i

    def delete_edge(self, a, c) -> None:
        i, j = self.index(a), self.index(c)
        if not self.rows[i] >> j & 1:
            raise EdgeError(f"edge {self.labels[i]}{self.labels[j]} not present")
        self.rows[i] &= ~(1 << j)
        self.rows[j] &= ~(1 << i)

    def degree(self, label) -> int:
        return self.rows[self.index(label)].bit_count()

    def neighbors(self, label) -> list[VertexLabel]:
        return [self.labels[w] for w in _bits(self.rows[self.index(label)])]

    def freeze(self) -> Graph:
        g = Graph(tuple(self.labels), tuple(self.rows))
        g.audit()
        return g


def _bits(row: int) -> Iterator[int]:
    while row:
        low = row & -row
        yield low.bit_length() - 1
        row ^= low
