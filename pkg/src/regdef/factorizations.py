"""Matchings and factorizations consumed by the constructions.

Vertices here are arbitrary hashable objects; edges are frozensets of two
vertices so that orientation never matters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

Pair = frozenset


class FactorizationError(ValueError):
    pass


class OddOrder(FactorizationError):
    pass


class EvenOrder(FactorizationError):
    pass


class CountTooLarge(FactorizationError):
    pass


class UnsatisfiableRequirements(FactorizationError):
    pass


class NoSuchMatching(FactorizationError):
    pass


def pair(a, b) -> frozenset:
    if a == b:
        raise ValueError(f"loop {a}")
    return frozenset((a, b))


@dataclass(frozen=True)
class Factorization:
    host: tuple
    factors: tuple[frozenset, ...]  # each factor is a frozenset of pairs

    def __len__(self) -> int:
        return len(self.factors)

    def __getitem__(self, i: int) -> frozenset:
        return self.factors[i]

    def index_of(self, edge) -> int:
        e = frozenset(edge)
        hits = [i for i, f in enumerate(self.factors) if e in f]
        if len(hits) != 1:
            raise UnsatisfiableRequirements(f"edge {set(e)} lies in {len(hits)} factors")
        return hits[0]

    def is_edge_disjoint(self) -> bool:
        seen: set = set()
        for f in self.factors:
            if seen & f:
                return False
            seen |= f
        return True

    def edges(self) -> set:
        out: set = set()
        for f in self.factors:
            out |= f
        return out


def degree_map(edges: Iterable[frozenset]) -> dict:
    deg: dict = {}
    for e in edges:
        for v in e:
            deg[v] = deg.get(v, 0) + 1
    return deg


def is_perfect_matching(edges: Iterable[frozenset], vertices: Iterable) -> bool:
    vs = set(vertices)
    deg = degree_map(edges)
    return set(deg) == vs and all(d == 1 for d in deg.values())


def is_hamiltonian_cycle(edges: Iterable[frozenset], vertices: Sequence) -> bool:
    edges = list(edges)
    vs = set(vertices)
    deg = degree_map(edges)
    if set(deg) != vs or any(d != 2 for d in deg.values()) or len(edges) != len(vs):
        return False
    nbrs: dict = {v: [] for v in vs}
    for e in edges:
        a, b = tuple(e)
        nbrs[a].append(b)
        nbrs[b].append(a)
    start = next(iter(vs))
    seen, stack = {start}, [start]
    while stack:
        for w in nbrs[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == vs


def cyclic_bipartite_matchings(m: int) -> list[list[tuple[int, int]]]:
    """``M_i`` (i = 1..m) pairs a_t with b_{(i+t-2 mod m)+1}, as index pairs
    (t, partner). Together they cover all m*m pairs exactly once."""
    if m < 1:
        raise ValueError("m must be positive")
    return [[(t, (i + t - 2) % m + 1) for t in range(1, m + 1)] for i in range(1, m + 1)]


def one_factorization(vertices: Sequence[Hashable]) -> Factorization:
    """Round-robin 1-factorization of the complete graph on ``vertices``.

    The last-listed vertex stays fixed; round r pairs it with ``rest[r]`` and
    pairs ``rest[r-d]`` with ``rest[r+d]`` (indices mod len(rest)).
    """
    vs = list(vertices)
    if len(vs) < 2 or len(vs) % 2:
        raise OddOrder(f"need an even number (>= 2) of vertices, got {len(vs)}")
    if len(set(vs)) != len(vs):
        raise ValueError("duplicate vertices")
    fixed, rest = vs[-1], vs[:-1]
    m = len(rest)
    factors = []
    for r in range(m):
        f = {pair(fixed, rest[r])}
        for d in range(1, m // 2 + 1):
            f.add(pair(rest[(r - d) % m], rest[(r + d) % m]))
        factors.append(frozenset(f))
    return Factorization(tuple(vs), tuple(factors))


def reindex_factorization(f: Factorization, requirements: Sequence[tuple[int, Iterable]]) -> Factorization:
    """Permute factors so each required edge sits at its required (0-based) slot.

    Unconstrained factors fill the remaining slots in their original order.
    """
    slots: dict[int, int] = {}
    used_sources: dict[int, int] = {}
    for target, edge in requirements:
        if not 0 <= target < len(f):
            raise UnsatisfiableRequirements(f"slot {target} out of range")
        src = f.index_of(edge)
        if slots.get(target, src) != src:
            raise UnsatisfiableRequirements(f"slot {target} claimed by two different factors")
        if used_sources.get(src, target) != target:
            raise UnsatisfiableRequirements(f"factor {src} required at two slots")
        slots[target] = src
        used_sources[src] = target
    free_sources = iter(i for i in range(len(f)) if i not in used_sources)
    order = [slots[t] if t in slots else next(free_sources) for t in range(len(f))]
    return Factorization(f.host, tuple(f.factors[i] for i in order))


def walecki_cycles(vertices: Sequence[Hashable]) -> list[list]:
    """Walecki decomposition of K_{2m+1} into m Hamiltonian cycles (vertex orders).

    The last vertex is the hub; the others sit on a circle and cycle r follows
    the zigzag r, r+1, r-1, r+2, r-2, ... around it.
    """
    vs = list(vertices)
    if len(vs) < 3 or len(vs) % 2 == 0:
        raise EvenOrder(f"need an odd number (>= 3) of vertices, got {len(vs)}")
    hub, ring = vs[-1], vs[:-1]
    n2 = len(ring)
    cycles = []
    for r in range(n2 // 2):
        order = [ring[r]]
        for d in range(1, n2 // 2 + 1):
            order.append(ring[(r + d) % n2])
            if len(order) < n2:
                order.append(ring[(r - d) % n2])
        cycles.append([hub] + order)
    return cycles


def two_factorization(vertices: Sequence[Hashable], count: int) -> Factorization:
    """``count`` edge-disjoint Hamiltonian cycles of the complete graph on an
    odd number of vertices."""
    vs = list(vertices)
    if len(vs) < 3 or len(vs) % 2 == 0:
        raise EvenOrder(f"need an odd number (>= 3) of vertices, got {len(vs)}")
    if count < 0 or count > (len(vs) - 1) // 2:
        raise CountTooLarge(f"K_{len(vs)} has only {(len(vs) - 1) // 2} disjoint 2-factors")
    factors = []
    for cyc in walecki_cycles(vs)[:count]:
        factors.append(frozenset(pair(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))))
    return Factorization(tuple(vs), tuple(factors))


def maximal_bipartite_matching(
    part_a: Sequence[Hashable],
    part_b: Sequence[Hashable],
    unsaturated: Iterable[Hashable] = (),
    used: Iterable[frozenset] = (),
) -> set[frozenset]:
    """A matching of the complete bipartite graph (part_a, part_b) that saturates
    every vertex except ``unsaturated`` and avoids the ``used`` edges.

    Tries the cyclic shifts a_i -> b_{i+sigma} of the two remaining vertex lists,
    sigma = 0, 1, ..., and returns the first one that avoids ``used``. If every
    shift collides, falls back to an augmenting-path search.
    """
    skip = set(unsaturated)
    unknown = skip - set(part_a) - set(part_b)
    if unknown:
        raise NoSuchMatching(f"unsaturated vertices outside both parts: {unknown}")
    a = [v for v in part_a if v not in skip]
    b = [v for v in part_b if v not in skip]
    if len(a) != len(b):
        raise NoSuchMatching(f"{len(a)} vs {len(b)} vertices left to saturate")
    taken = {frozenset(e) for e in used}
    m = len(a)
    if m == 0:
        return set()
    for sigma in range(m):
        cand = {pair(a[i], b[(i + sigma) % m]) for i in range(m)}
        if not cand & taken:
            return cand
    found = _augmenting_matching(a, b, taken)
    if found is None:
        raise NoSuchMatching("no perfect matching of the remaining vertices avoids the used edges")
    return found


def _augmenting_matching(a: list, b: list, taken: set) -> set | None:
    """Perfect matching of a onto b avoiding ``taken`` (Kuhn's algorithm), or None."""
    match_b: dict = {}

    def try_vertex(x, seen: set) -> bool:
        for y in b:
            if y in seen or pair(x, y) in taken:
                continue
            seen.add(y)
            if y not in match_b or try_vertex(match_b[y], seen):
                match_b[y] = x
                return True
        return False

    for x in a:
        if not try_vertex(x, set()):
            return None
    return {pair(x, y) for y, x in match_b.items()}
