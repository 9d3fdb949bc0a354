"""Shared pieces of the constructions: results, errors, the chromatic join,
the layered base graphs, feasibility and the post-construction audit."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

from ..coloring import (
    DEFAULT_BUDGET,
    ColorAssignment,
    SearchBudget,
    chromatic_number,
    count_extensions,
    is_proper,
    is_total,
)
from ..graph import Edge, Family, Graph, GraphBuilder, GraphError, VertexLabel, as_label, is_regular
from ..trace import BaseFamily, ConstructionTrace, TraceStep


class ConstructionError(ValueError):
    reason = "ParamOutOfRange"


class ParamOutOfRange(ConstructionError):
    reason = "ParamOutOfRange"


class ParityViolation(ConstructionError):
    reason = "BothOdd"


class TEqualsKMinus2(ConstructionError):
    reason = "TEqualsKMinus2"


class LabelCollision(ConstructionError):
    pass


class ImproperInputColoring(ConstructionError):
    pass


class EdgeNotInGraph(ConstructionError):
    pass


class InternalRecipeInconsistency(RuntimeError):
    """A construction produced something other than what it claims."""

    def __init__(self, message: str, trace: Optional[ConstructionTrace] = None):
        super().__init__(message)
        self.trace = trace


class Reason(str, Enum):
    OK = "OK"
    RATIO_VIOLATED = "RatioViolated"
    BOTH_ODD = "BothOdd"
    T_EQUALS_K_MINUS_2 = "TEqualsKMinus2"
    TOO_FEW_VERTICES = "TooFewVertices"
    PARAM_OUT_OF_RANGE = "ParamOutOfRange"


@dataclass(frozen=True)
class FeasibilityVerdict:
    feasible: bool
    reason: Reason

    def __post_init__(self):
        if self.feasible != (self.reason is Reason.OK):
            raise ValueError("feasible must agree with reason")


def feasibility(n: int, r: int, k: int) -> FeasibilityVerdict:
    """Necessary conditions for an r-regular k-chromatic graph on n vertices."""

    def no(reason: Reason) -> FeasibilityVerdict:
        return FeasibilityVerdict(False, reason)

    if n < 1 or r < 0 or k < 1:
        return no(Reason.PARAM_OUT_OF_RANGE)
    if k == 1:
        return FeasibilityVerdict(True, Reason.OK) if r == 0 else no(Reason.RATIO_VIOLATED)
    if r >= 2 * (k - 1) and n < 2 * k:
        return no(Reason.TOO_FEW_VERTICES)
    # every color class has at most n - r vertices, so n <= k (n - r)
    if r * k > n * (k - 1):
        return no(Reason.RATIO_VIOLATED)
    if n % 2 and r % 2:
        return no(Reason.BOTH_ODD)
    if n == 3 * k - 1 and r - 2 * (k - 1) == k - 2:
        return no(Reason.T_EQUALS_K_MINUS_2)
    return FeasibilityVerdict(True, Reason.OK)


@dataclass
class ConstructionResult:
    graph: Graph
    canonical_coloring: ColorAssignment
    defining_set: ColorAssignment
    trace: ConstructionTrace
    claimed_r: int
    claimed_k: int
    clique: tuple[VertexLabel, ...] = ()

    @property
    def n(self) -> int:
        return self.graph.n

    def summary(self) -> str:
        return f"n={self.n} r={self.claimed_r} k={self.claimed_k} |S|={len(self.defining_set)}"


@dataclass
class AuditReport:
    regular: bool
    chromatic: int
    defining: bool
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.notes


def audit(res: ConstructionResult, budget: SearchBudget = DEFAULT_BUDGET) -> AuditReport:
    """Regularity, exact chromatic number, uniqueness of the defining set's
    extension, plus the bookkeeping invariants. Problems land in ``notes``."""
    g, k = res.graph, res.claimed_k
    notes = []
    regular = is_regular(g, res.claimed_r)
    if not regular:
        bad = sorted({d for d in g.degrees()})
        notes.append(f"not {res.claimed_r}-regular (degrees {bad})")
    if not (is_total(g, res.canonical_coloring) and is_proper(g, res.canonical_coloring)):
        notes.append("canonical coloring is not a proper total coloring")
    if res.canonical_coloring.k != k:
        notes.append("canonical coloring palette differs from k")
    if not res.defining_set.issubset(res.canonical_coloring):
        notes.append("defining set disagrees with the canonical coloring")
    if len(res.defining_set) != k - 1:
        notes.append(f"defining set has {len(res.defining_set)} vertices, not {k - 1}")
    for a in res.clique:
        for b in res.clique:
            if a != b and not g.has_edge(a, b):
                notes.append(f"claimed clique misses edge {a}{b}")
    if res.clique and {res.canonical_coloring[v] for v in res.clique} != set(range(1, k + 1)):
        notes.append("claimed clique does not see all k colors")
    if not res.trace.replay().same_as(g):
        notes.append("trace replay does not reproduce the graph")
    chi = chromatic_number(g, budget)
    if chi != k:
        notes.append(f"chromatic number is {chi}, not {k}")
    defining = count_extensions(g, res.defining_set, k, cap=2, budget=budget) == 1
    if not defining:
        notes.append("defining set does not extend uniquely")
    return AuditReport(regular, chi, defining, notes)


def checked(res: ConstructionResult, verify: bool = True, budget: SearchBudget = DEFAULT_BUDGET) -> ConstructionResult:
    if verify:
        report = audit(res, budget)
        if not report.ok:
            p = ", ".join(f"{k}={v}" for k, v in res.trace.params.items())
            raise InternalRecipeInconsistency(
                f"{res.trace.base_family.value}({p}): " + "; ".join(report.notes), res.trace
            )
    return res


# ---------------------------------------------------------------------------
# chromatic join and layered graphs


def _join_edges(labels_g, cg: ColorAssignment, labels_h, ch: ColorAssignment) -> list[Edge]:
    return [(x, y) for x in labels_g for y in labels_h if cg[x] != ch[y]]


def chromatic_join(g: Graph, cg: ColorAssignment, h: Graph, ch: ColorAssignment) -> Graph:
    """Disjoint union of g and h plus every cross pair whose colors differ."""
    clash = set(g.labels) & set(h.labels)
    if clash:
        raise LabelCollision(f"labels used by both graphs: {sorted(map(str, clash))}")
    for graph, col in ((g, cg), (h, ch)):
        if not (is_total(graph, col) and is_proper(graph, col)):
            raise ImproperInputColoring("join inputs need proper total colorings")
    b = GraphBuilder.from_graph(g)
    for lb in h.labels:
        b.add_vertex(lb)
    for x, y in h.edges():
        b.add_edge(x, y)
    for x, y in _join_edges(g.labels, cg, h.labels, ch):
        b.add_edge(x, y)
    return b.freeze()


LAYER_FAMILIES = (Family.U, Family.V, Family.W, Family.X, Family.Y)


def layer_labels(family: Family, k: int, half: Optional[int] = None) -> list[VertexLabel]:
    """Labels of one k-vertex layer in color order 1..k.

    With ``half`` set, colors half+1..2*half are written as primed labels
    1'..half' and any color above 2*half keeps its plain index.
    """
    out = []
    for c in range(1, k + 1):
        if half and half < c <= 2 * half:
            out.append(VertexLabel(family, c - half, True))
        else:
            out.append(VertexLabel(family, c))
    return out


def layered_base(l: int, k: int, half: Optional[int] = None):
    """Disjoint layers (K_k, empty, ..., empty, K_k) with color i on the i-th
    vertex of each layer. Returns (graph, coloring, layers)."""
    layers = [layer_labels(LAYER_FAMILIES[i], k, half) for i in range(l)]
    b = GraphBuilder()
    colors = {}
    for idx, layer in enumerate(layers):
        for c, lb in enumerate(layer, start=1):
            b.add_vertex(lb)
            colors[lb] = c
        if idx in (0, l - 1):
            for i in range(k):
                for j in range(i + 1, k):
                    b.add_edge(layer[i], layer[j])
    return b.freeze(), ColorAssignment(k, colors), layers


def build_glk(l: int, k: int, half: Optional[int] = None, verify: bool = True) -> ConstructionResult:
    """The chain K_k, empty, ..., empty, K_k with chromatic joins between
    consecutive layers: lk vertices, 2(k-1)-regular, k-chromatic, and the first
    k-1 vertices of layer one (colored 1..k-1) force everything."""
    if l < 2 or k < 2:
        raise ParamOutOfRange(f"need l >= 2 and k >= 2, got l={l}, k={k}")
    if l > len(LAYER_FAMILIES):
        raise ParamOutOfRange(f"at most {len(LAYER_FAMILIES)} layers have labels")
    base, coloring, layers = layered_base(l, k, half)
    joins = []
    for a, b in zip(layers, layers[1:]):
        joins += _join_edges(a, coloring, b, coloring)
    trace = ConstructionTrace(BaseFamily.GLK, {"l": l, "k": k}, base, [TraceStep(added_edges=joins, note="joins")])
    gb = GraphBuilder.from_graph(base)
    for x, y in joins:
        gb.add_edge(x, y)
    g = gb.freeze()
    first = layers[0]
    res = ConstructionResult(
        graph=g,
        canonical_coloring=coloring,
        defining_set=coloring.restrict(first[: k - 1]),
        trace=trace,
        claimed_r=2 * (k - 1),
        claimed_k=k,
        clique=tuple(first),
    )
    return checked(res, verify)


# ---------------------------------------------------------------------------
# recipe bookkeeping


class Recipe:
    """Mutable graph plus trace, for the construction recipes.

    Any edge operation that does not apply cleanly (deleting a missing edge,
    adding an existing one) becomes an InternalRecipeInconsistency carrying the
    trace so far.
    """

    def __init__(self, base: Graph, family: BaseFamily, params: dict[str, int]):
        self.b = GraphBuilder.from_graph(base)
        self.trace = ConstructionTrace(family, dict(params), base)

    def fail(self, message: str):
        raise InternalRecipeInconsistency(message, self.trace)

    def apply(
        self,
        note: str,
        delete: Sequence[Edge] = (),
        add: Sequence[Edge] = (),
        new_vertex: Optional[VertexLabel] = None,
        join_to_ends: bool = False,
        removed_vertex: Optional[VertexLabel] = None,
    ) -> TraceStep:
        """One trace step. With ``join_to_ends`` the new vertex is joined to
        every endpoint of the deleted edges (each endpoint exactly once)."""
        delete = [(as_label(a), as_label(c)) for a, c in delete]
        add = [(as_label(a), as_label(c)) for a, c in add]
        if join_to_ends:
            ends: list[VertexLabel] = []
            for e in delete:
                for v in e:
                    if v in ends:
                        self.fail(f"{note}: {v} is an endpoint of two deleted edges")
                    ends.append(v)
            add = add + [(new_vertex, v) for v in ends]
        step = TraceStep(new_vertex, list(delete), list(add), removed_vertex, note)
        self.trace.steps.append(step)
        try:
            step.check()
            if new_vertex is not None:
                self.b.add_vertex(new_vertex)
            if removed_vertex is not None:
                gone = self.b.remove_vertex(removed_vertex)
                step.deleted_edges[:0] = gone
            for a, c in delete:
                self.b.delete_edge(a, c)
            for a, c in add:
                self.b.add_edge(a, c)
        except (GraphError, ValueError) as exc:
            self.fail(f"{note}: {exc}")
        return step

    def has_edge(self, a, c) -> bool:
        return self.b.has_edge(a, c)

    def freeze(self) -> Graph:
        return self.b.freeze()


def forced_color(g: Graph, colors: dict, v: VertexLabel, k: int) -> Optional[int]:
    """The one color in 1..k missing around ``v``, or None if not exactly one."""
    seen = {colors[g.labels[w]] for w in g.neighbors(g.index(v)) if g.labels[w] in colors}
    free = [c for c in range(1, k + 1) if c not in seen]
    return free[0] if len(free) == 1 else None


def remove_edges(g: Graph, edges: Iterable) -> Graph:
    try:
        return g.without_edges(edges)
    except GraphError as exc:
        raise EdgeNotInGraph(str(exc)) from exc


def nonessential_check(g: Graph, s: ColorAssignment, f: Iterable, budget: SearchBudget = DEFAULT_BUDGET) -> bool:
    """True iff deleting ``f`` keeps both chi(g) and the defining property of ``s``.

    ``s`` is assumed to define g already; only the reduced graph is searched.
    """
    reduced = remove_edges(g, f)
    chi = chromatic_number(g, budget)
    if chromatic_number(reduced, budget) != chi:
        return False
    return count_extensions(reduced, s, chi, cap=2, budget=budget) == 1
