"""Regular k-chromatic graphs with defining sets of size k-1, and the exact
coloring machinery that checks them."""

from .coloring import (
    BudgetExhausted,
    ColorAssignment,
    SearchBudget,
    chromatic_number,
    count_extensions,
    defining_number,
    extension_verdict,
    is_defining_set,
    smallest_defining_set,
)
from .constructions import (
    ConstructionResult,
    audit,
    build_glk,
    build_theorem1,
    build_theorem2,
    build_theorem3,
    build_theorem4,
    feasibility,
    nonessential_check,
)
from .graph import Graph, VertexLabel, lab, make_graph

__all__ = [
    "BudgetExhausted",
    "ColorAssignment",
    "ConstructionResult",
    "Graph",
    "SearchBudget",
    "VertexLabel",
    "audit",
    "build_glk",
    "build_theorem1",
    "build_theorem2",
    "build_theorem3",
    "build_theorem4",
    "chromatic_number",
    "count_extensions",
    "defining_number",
    "extension_verdict",
    "feasibility",
    "is_defining_set",
    "lab",
    "make_graph",
    "nonessential_check",
    "smallest_defining_set",
]
