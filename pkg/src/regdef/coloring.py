"""Exact coloring engine: chromatic number, extension counting, defining sets.

All searches are single-threaded and deterministic. Vertices are branched on
in order of smallest remaining domain (largest saturation), then larger
degree, then smaller vertex id.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterator, Mapping, Optional

from .graph import Graph, VertexLabel, as_label


class ColoringError(ValueError):
    pass


class ImproperPartial(ColoringError):
    pass


class ChiMismatch(ColoringError):
    pass


class BudgetExhausted(RuntimeError):
    """Search stopped early. ``bounds`` holds whatever was proven so far."""

    def __init__(self, message: str, bounds: tuple[int, Optional[int]]):
        super().__init__(message)
        self.bounds = bounds


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int = 50_000_000
    time_limit: float = 600.0

    def __post_init__(self):
        if self.node_limit <= 0 or self.time_limit <= 0:
            raise ValueError("budget limits must be positive")


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class ColorAssignment:
    """Partial or total map from vertex labels to colors 1..k."""

    k: int
    colors: Mapping[VertexLabel, int] = field(default_factory=dict)

    def __post_init__(self):
        colors = {as_label(v): int(c) for v, c in dict(self.colors).items()}
        for v, c in colors.items():
            if not 1 <= c <= self.k:
                raise ColoringError(f"color {c} of {v} outside 1..{self.k}")
        object.__setattr__(self, "colors", colors)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v) -> int:
        return self.colors[as_label(v)]

    def __contains__(self, v) -> bool:
        return as_label(v) in self.colors

    def items(self):
        return self.colors.items()

    def keys(self):
        return self.colors.keys()

    def values(self):
        return self.colors.values()

    def restrict(self, vertices) -> "ColorAssignment":
        keep = {as_label(v) for v in vertices}
        return ColorAssignment(self.k, {v: c for v, c in self.colors.items() if v in keep})

    def relabel(self, perm: Mapping[int, int]) -> "ColorAssignment":
        """Apply a palette permutation given as old color -> new color."""
        return ColorAssignment(self.k, {v: perm[c] for v, c in self.colors.items()})

    def issubset(self, other: "ColorAssignment") -> bool:
        return all(other.colors.get(v) == c for v, c in self.colors.items())

    def as_vector(self, g: Graph) -> list[int]:
        """Colors by vertex id, 0 for uncolored."""
        vec = [0] * g.n
        for v, c in self.colors.items():
            vec[g.index(v)] = c
        return vec

    @classmethod
    def from_vector(cls, g: Graph, k: int, vec) -> "ColorAssignment":
        return cls(k, {g.labels[i]: c for i, c in enumerate(vec) if c})


def is_proper(g: Graph, coloring: ColorAssignment) -> bool:
    """No edge with both ends colored the same (uncolored ends are ignored)."""
    vec = coloring.as_vector(g)
    return all(not (vec[i] and vec[i] == vec[j]) for i, j in g.edge_ids())


def is_total(g: Graph, coloring: ColorAssignment) -> bool:
    return all(v in coloring for v in g.labels)


class Outcome(str, Enum):
    NONE = "NONE"
    UNIQUE = "UNIQUE"
    MULTIPLE = "MULTIPLE"


@dataclass(frozen=True)
class ExtensionVerdict:
    outcome: Outcome
    witness: Optional[ColorAssignment] = None


class _Clock:
    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.deadline = time.monotonic() + budget.time_limit

    def tick(self) -> bool:
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            return False
        if self.nodes & 0xFFF == 0 and time.monotonic() > self.deadline:
            return False
        return True


class _OutOfBudget(Exception):
    pass


# ---------------------------------------------------------------------------
# chromatic number


def greedy_coloring(g: Graph) -> list[int]:
    """DSATUR greedy coloring; colors 1.. by vertex id."""
    n = g.n
    color = [0] * n
    sat = [0] * n  # bitmask of neighbor colors
    deg = g.degrees()
    for _ in range(n):
        v = max(
            (u for u in range(n) if not color[u]),
            key=lambda u: (sat[u].bit_count(), deg[u], -u),
        )
        c = 1
        while sat[v] >> c & 1:
            c += 1
        color[v] = c
        for w in g.neighbors(v):
            sat[w] |= 1 << c
    return color


def max_clique(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> list[int]:
    """Exact maximum clique by bitset branch and bound (vertex ids)."""
    best: list[int] = []
    clock = _Clock(budget)
    adj = g.adj

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        if not clock.tick():
            raise _OutOfBudget
        if not cand:
            if len(clique) > len(best):
                best = list(clique)
            return
        if len(clique) + cand.bit_count() <= len(best):
            return
        while cand:
            if len(clique) + cand.bit_count() <= len(best):
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            clique.append(v)
            expand(clique, cand & adj[v])
            clique.pop()

    try:
        expand([], (1 << g.n) - 1)
    except _OutOfBudget:
        pass
    return best


def find_coloring(g: Graph, k: int, budget: SearchBudget = DEFAULT_BUDGET) -> Optional[list[int]]:
    """A proper k-coloring (colors 1..k by vertex id) or None if none exists.

    Plain DSATUR backtracking; a vertex may only open color ``used + 1``, which
    removes palette-permutation symmetry.
    """
    n = g.n
    if n == 0:
        return []
    if k <= 0:
        return None
    color = [0] * n
    # counts[v][c] = number of colored neighbors of v with color c
    counts = [[0] * (k + 2) for _ in range(n)]
    sat = [0] * n
    deg = g.degrees()
    nbrs = [g.neighbors(v) for v in range(n)]
    clock = _Clock(budget)

    def pick() -> int:
        best, key = -1, None
        for u in range(n):
            if color[u]:
                continue
            kk = (sat[u], deg[u], -u)
            if key is None or kk > key:
                best, key = u, kk
        return best

    def assign(v: int, c: int, sign: int) -> None:
        for w in nbrs[v]:
            before = counts[w][c]
            counts[w][c] += sign
            if sign > 0 and before == 0:
                sat[w] += 1
            elif sign < 0 and before == 1:
                sat[w] -= 1

    def rec(done: int, used: int) -> bool:
        if done == n:
            return True
        if not clock.tick():
            raise _OutOfBudget
        v = pick()
        if sat[v] >= k:
            return False
        for c in range(1, min(k, used + 1) + 1):
            if counts[v][c]:
                continue
            color[v] = c
            assign(v, c, +1)
            if rec(done + 1, max(used, c)):
                return True
            assign(v, c, -1)
            color[v] = 0
        return False

    if rec(0, 0):
        return color
    return None


def chromatic_number(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> int:
    """Exact chromatic number: clique lower bound, DSATUR upper bound, then an
    exhaustive k-colorability test for each k in between."""
    if g.n == 0:
        raise ValueError("chromatic number of the empty graph is undefined here")
    hi = max(greedy_coloring(g))
    lo = max(1, len(max_clique(g, budget)))
    if g.num_edges:
        lo = max(lo, 2)
    for k in range(lo, hi):
        try:
            found = find_coloring(g, k, budget)
        except _OutOfBudget:
            raise BudgetExhausted(f"chromatic number search exceeded budget at k={k}", (k, hi)) from None
        if found is not None:
            return k
    return hi


# ---------------------------------------------------------------------------
# extensions of partial colorings


class _ExtensionSearch:
    """Labeled extension counting with unit propagation over color domains."""

    def __init__(self, g: Graph, k: int, budget: SearchBudget):
        self.g = g
        self.k = k
        self.nbrs = [g.neighbors(v) for v in range(g.n)]
        self.deg = g.degrees()
        self.clock = _Clock(budget)
        self.witness: Optional[list[int]] = None

    def propagate(self, dom: list[int], queue: list[int], fixed: list[bool]) -> bool:
        while queue:
            v = queue.pop()
            if fixed[v]:
                continue
            fixed[v] = True
            bit = dom[v]
            for w in self.nbrs[v]:
                if dom[w] & bit:
                    if fixed[w]:
                        return False
                    dom[w] &= ~bit
                    if not dom[w]:
                        return False
                    if dom[w] & (dom[w] - 1) == 0:
                        queue.append(w)
        return True

    def count(self, dom: list[int], fixed: list[bool], cap: Optional[int]) -> int:
        if not self.clock.tick():
            raise _OutOfBudget
        best, key = -1, None
        for u in range(len(dom)):
            if fixed[u]:
                continue
            kk = (-dom[u].bit_count(), self.deg[u], -u)
            if key is None or kk > key:
                best, key = u, kk
        if best < 0:
            if self.witness is None:
                self.witness = [d.bit_length() for d in dom]
            return 1
        total = 0
        options = dom[best]
        while options:
            bit = options & -options
            options ^= bit
            d2 = list(dom)
            f2 = list(fixed)
            d2[best] = bit
            if self.propagate(d2, [best], f2):
                total += self.count(d2, f2, None if cap is None else cap - total)
                if cap is not None and total >= cap:
                    return total
        return total

    def run(self, precolor: list[int], cap: Optional[int]) -> int:
        full = (1 << self.k) - 1
        dom = [1 << (c - 1) if c else full for c in precolor]
        fixed = [False] * len(dom)
        queue = [v for v, c in enumerate(precolor) if c]
        if not self.propagate(dom, queue, fixed):
            return 0
        # propagation may leave singleton domains that were never queued
        singles = [v for v in range(len(dom)) if not fixed[v] and dom[v] & (dom[v] - 1) == 0]
        if singles and not self.propagate(dom, singles, fixed):
            return 0
        return self.count(dom, fixed, cap)


def _check_partial(g: Graph, partial: ColorAssignment, k: int) -> list[int]:
    vec = partial.as_vector(g)
    if any(c > k for c in vec):
        raise ImproperPartial(f"partial coloring uses a color above k={k}")
    for i, j in g.edge_ids():
        if vec[i] and vec[i] == vec[j]:
            raise ImproperPartial(f"{g.labels[i]} and {g.labels[j]} are adjacent and both colored {vec[i]}")
    return vec


def count_extensions(
    g: Graph,
    partial: ColorAssignment,
    k: int,
    cap: Optional[int] = 2,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> int:
    """Number of proper total k-colorings extending ``partial``, stopped at ``cap``.

    Colorings are counted as labeled maps: two extensions that differ only by a
    palette permutation are different. ``cap=None`` counts all of them.
    """
    if cap is not None and cap < 1:
        raise ValueError("cap must be at least 1")
    vec = _check_partial(g, partial, k)
    if k < 1:
        return 0
    search = _ExtensionSearch(g, k, budget)
    try:
        return search.run(vec, cap)
    except _OutOfBudget:
        raise BudgetExhausted("extension count exceeded budget", (0, cap)) from None


def extension_verdict(
    g: Graph, partial: ColorAssignment, k: int, budget: SearchBudget = DEFAULT_BUDGET
) -> ExtensionVerdict:
    vec = _check_partial(g, partial, k)
    search = _ExtensionSearch(g, k, budget)
    try:
        found = search.run(vec, 2)
    except _OutOfBudget:
        raise BudgetExhausted("extension search exceeded budget", (0, 2)) from None
    if found == 0:
        return ExtensionVerdict(Outcome.NONE)
    witness = ColorAssignment.from_vector(g, k, search.witness)
    return ExtensionVerdict(Outcome.UNIQUE if found == 1 else Outcome.MULTIPLE, witness)


def is_defining_set(
    g: Graph,
    s: ColorAssignment,
    chi: int,
    verify_chi: bool = False,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> bool:
    if verify_chi:
        actual = chromatic_number(g, budget)
        if actual != chi:
            raise ChiMismatch(f"supplied chi={chi} but the graph has chromatic number {actual}")
    return count_extensions(g, s, chi, cap=2, budget=budget) == 1


def lower_bound_check(g: Graph, s: ColorAssignment, chi: int) -> bool:
    # every defining set has at least chi - 1 vertices
    return len(s) >= chi - 1


# ---------------------------------------------------------------------------
# defining number


def _canonical_partials(g: Graph, subset: tuple[int, ...], k: int) -> Iterator[list[int]]:
    """Proper colorings of ``subset`` where colors are first used in ascending
    order: one representative per palette-relabeling class."""
    colors = [0] * len(subset)
    adj = g.adj

    def rec(pos: int, used: int):
        if pos == len(subset):
            yield list(colors)
            return
        v = subset[pos]
        for c in range(1, min(k, used + 1) + 1):
            if any(colors[q] == c and adj[v] >> subset[q] & 1 for q in range(pos)):
                continue
            colors[pos] = c
            yield from rec(pos + 1, max(used, c))
        colors[pos] = 0

    yield from rec(0, 0)


def smallest_defining_set(
    g: Graph,
    budget: SearchBudget = DEFAULT_BUDGET,
    min_size: Optional[int] = None,
    chi: Optional[int] = None,
) -> ColorAssignment:
    """A minimum-size defining set, searching sizes upward.

    The search starts at ``chi - 1`` unless ``min_size`` says otherwise; pass
    ``min_size=0`` to check the smaller sizes explicitly instead of relying on
    the lower bound.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    if chi is None:
        chi = chromatic_number(g, budget)
    start = chi - 1 if min_size is None else min_size
    clock = _Clock(budget)
    best_known = g.n  # coloring every vertex is always defining
    for m in range(max(0, start), g.n + 1):
        for subset in combinations(range(g.n), m):
            for cols in _canonical_partials(g, subset, chi):
                if not clock.tick():
                    raise BudgetExhausted("defining number search exceeded budget", (m, best_known))
                vec = [0] * g.n
                for v, c in zip(subset, cols):
                    vec[v] = c
                partial = ColorAssignment.from_vector(g, chi, vec)
                try:
                    n_ext = count_extensions(g, partial, chi, cap=2, budget=budget)
                except BudgetExhausted:
                    raise BudgetExhausted("defining number search exceeded budget", (m, best_known)) from None
                if n_ext == 1:
                    return partial
    raise AssertionError("unreachable: a full proper coloring is always defining")


def defining_number(
    g: Graph, budget: SearchBudget = DEFAULT_BUDGET, min_size: Optional[int] = None
) -> int:
    return len(smallest_defining_set(g, budget, min_size))
