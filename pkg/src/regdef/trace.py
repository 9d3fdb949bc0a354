"""Step-by-step records of how a construction modified its base graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .graph import Edge, Graph, GraphBuilder, VertexLabel


class BaseFamily(str, Enum):
    GLK = "Glk"
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"


@dataclass
class TraceStep:
    new_vertex: Optional[VertexLabel] = None
    deleted_edges: list[Edge] = field(default_factory=list)
    added_edges: list[Edge] = field(default_factory=list)
    removed_vertex: Optional[VertexLabel] = None
    note: str = ""

    def check(self) -> None:
        deleted = {frozenset(e) for e in self.deleted_edges}
        added = {frozenset(e) for e in self.added_edges}
        if deleted & added:
            raise ValueError(f"step {self.note!r} deletes and adds the same edge")


@dataclass
class ConstructionTrace:
    base_family: BaseFamily
    params: dict[str, int]
    base: Graph
    steps: list[TraceStep] = field(default_factory=list)

    def replay(self) -> Graph:
        """Rebuild the final graph from ``base`` by applying every step in order.

        Within a step the order is: add the new vertex, remove the removed
        vertex (with all its edges), delete edges, add edges.
        """
        b = GraphBuilder.from_graph(self.base)
        for step in self.steps:
            step.check()
            if step.new_vertex is not None:
                b.add_vertex(step.new_vertex)
            if step.removed_vertex is not None:
                b.remove_vertex(step.removed_vertex)
            for a, c in step.deleted_edges:
                if step.removed_vertex is not None and step.removed_vertex in (a, c):
                    continue
                b.delete_edge(a, c)
            for a, c in step.added_edges:
                b.add_edge(a, c)
        return b.freeze()

    def new_vertex_columns(self) -> list[tuple[VertexLabel, list[Edge]]]:
        """(new vertex, edges deleted for it), in creation order."""
        return [(s.new_vertex, s.deleted_edges) for s in self.steps if s.new_vertex is not None]
