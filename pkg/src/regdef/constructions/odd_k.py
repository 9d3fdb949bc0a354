"""2(k-1)-regular k-chromatic graphs on 2k+s vertices, k odd.

Each layer of the two-layer chain is split into a low half u_1..u_h, a high
half u_1'..u_h' (u_i' has color i+h) and the top vertex u_k, with
h = (k-1)/2. New vertices are wedged into deleted edges.
"""

from __future__ import annotations

from ..coloring import ColorAssignment
from ..factorizations import cyclic_bipartite_matchings, one_factorization, pair, reindex_factorization
from ..graph import Family, VertexLabel
from ..trace import BaseFamily
from .common import ConstructionResult, ParamOutOfRange, Recipe, build_glk, checked, forced_color


def _wrap(i: int, m: int) -> int:
    return (i - 1) % m + 1


def _factor_edges(factor, order) -> list:
    """Edges of a factor as ordered tuples, sorted by position in ``order``."""
    pos = {v: i for i, v in enumerate(order)}
    edges = [tuple(sorted(e, key=pos.__getitem__)) for e in factor]
    return sorted(edges, key=lambda e: (pos[e[0]], pos[e[1]]))


def pinned_factorization(vertices, hub, partners):
    """1-factorization of K_{vertices} whose factor t (0-based) holds the edge
    hub--partners[t]. Round robin with ``hub`` fixed, then reindexed."""
    order = [v for v in vertices if v != hub] + [hub]
    f = one_factorization(order)
    return reindex_factorization(f, [(t, pair(hub, p)) for t, p in enumerate(partners)])


def build_theorem2(k: int, s: int, verify: bool = True) -> ConstructionResult:
    """2(k-1)-regular k-chromatic graph on 2k+s vertices (k odd, 1 <= s <= k-2)
    with defining set u_1..u_{k-1} colored by index."""
    if k < 3 or k % 2 == 0:
        raise ParamOutOfRange(f"k must be odd and at least 3, got {k}")
    if not 1 <= s <= k - 2:
        raise ParamOutOfRange(f"s must lie in 1..{k - 2}, got {s}")
    h = (k - 1) // 2
    glk = build_glk(2, k, half=h, verify=False)
    ulay, vlay = (glk.trace.base.labels[:k], glk.trace.base.labels[k:])

    def U(c):
        return ulay[c - 1]

    def V(c):
        return vlay[c - 1]

    def Up(i):
        return U(i + h)

    def Vp(i):
        return V(i + h)

    n_x = min(s, h)
    n_y = s - n_x
    xs = [None] + [VertexLabel(Family.X, i) for i in range(1, n_x + 1)]
    ys = [None] + [VertexLabel(Family.Y, t) for t in range(1, n_y + 1)]

    rec = Recipe(glk.graph, BaseFamily.T2, {"k": k, "s": s})
    matchings = cyclic_bipartite_matchings(h)
    for i in range(1, n_x + 1):
        m = matchings[i - 1]
        delete = [(U(a), Up(b)) for a, b in m] + [(V(a), Vp(b)) for a, b in m]
        rec.apply(f"x{i}", new_vertex=xs[i], delete=delete, join_to_ends=True)

    expected = {}
    if n_y:
        if k % 4 == 1:
            a_verts = [Up(i) for i in range(1, h + 1)]
            b_verts = [V(i) for i in range(1, h + 1)]
            fa = pinned_factorization(a_verts, Up(h), [Up(t) for t in range(1, h)])
            fb = pinned_factorization(b_verts, V(h), [V(t) for t in range(1, h)])
        else:
            a_verts = [Up(i) for i in range(1, h + 1)] + [U(k)]
            b_verts = [V(i) for i in range(1, h + 1)] + [V(k)]
            fa = pinned_factorization(a_verts, U(k), [Up(t) for t in range(1, h + 1)])
            fb = pinned_factorization(b_verts, V(k), [V(t) for t in range(1, h + 1)])
        for t in range(1, n_y + 1):
            if k % 4 == 1:
                keep_a, keep_b = pair(Up(t), Up(h)), pair(V(t), V(h))
            else:
                keep_a, keep_b = pair(Up(t), U(k)), pair(V(t), V(k))
            delete = [e for e in _factor_edges(fa[t - 1], a_verts) if pair(*e) != keep_a]
            delete += [e for e in _factor_edges(fb[t - 1], b_verts) if pair(*e) != keep_b]
            if k % 4 == 1:
                delete += [(U(t), V(h)), (Up(t), V(k))]
            x_edges = [(xs[1], V(t))] + [(xs[i], U(_wrap(t + i - 1, h))) for i in range(2, h + 1)]
            delete += x_edges
            if k % 4 == 3:
                delete.append((V(k), U(t)))
            rec.apply(f"y{t}", new_vertex=ys[t], delete=delete, join_to_ends=True)
            expected[ys[t]] = k - 1 if k % 4 == 1 else t + h

    g = rec.freeze()
    colors = dict(glk.canonical_coloring.items())
    for x in xs[1:]:
        colors[x] = k
    for y in ys[1:]:
        c = forced_color(g, colors, y, k)
        if c != expected[y]:
            rec.fail(f"{y} is forced to {c}, expected {expected[y]}")
        colors[y] = c
    coloring = ColorAssignment(k, colors)
    clique = tuple([U(i) for i in range(1, h + 1)] + [Vp(i) for i in range(1, h + 1)] + [xs[1]])
    res = ConstructionResult(
        graph=g,
        canonical_coloring=coloring,
        defining_set=coloring.restrict([U(c) for c in range(1, k)]),
        trace=rec.trace,
        claimed_r=2 * (k - 1),
        claimed_k=k,
        clique=clique,
    )
    return checked(res, verify)


def theorem2_nonessential_edges(res: ConstructionResult) -> list:
    """Edges of the nonessential set F in H_h (the graph after all x's, before
    any y), taking x_1 v_i, w_j = u_j and z_i = u_i, restricted to present edges."""
    k = res.claimed_k
    h = (k - 1) // 2
    g = res.graph
    # layer labels are stored in color order 1..k
    U = [lb for lb in g.labels if lb.family == Family.U]
    V = [lb for lb in g.labels if lb.family == Family.V]
    xs = sorted((lb for lb in g.labels if lb.family == Family.X), key=lambda lb: lb.index)
    cand = [(V[i], V[j]) for i in range(h) for j in range(i + 1, h)]
    cand += [(U[h + i], U[h + j]) for i in range(h) for j in range(i + 1, h)]
    if xs:
        cand += [(xs[0], V[i]) for i in range(h)]
    cand += [(x, U[j]) for x in xs[1:] for j in range(k - 1)]
    cand += [(U[i], V[k - 1]) for i in range(k - 1)]
    return [e for e in cand if g.has_edge(*e)]
