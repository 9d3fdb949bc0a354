"""2(k-1)-regular k-chromatic graphs on 2k+s vertices, k even.

Layers are split into u_1..u_h and u_1'..u_h' (u_i' has color i+h), h = k/2.
"""

from __future__ import annotations

from ..coloring import ColorAssignment
from ..factorizations import cyclic_bipartite_matchings, pair
from ..graph import Family, VertexLabel
from ..trace import BaseFamily
from .common import ConstructionResult, ParamOutOfRange, Recipe, build_glk, checked, forced_color
from .odd_k import _factor_edges, _wrap, pinned_factorization


def build_theorem3(k: int, s: int, verify: bool = True) -> ConstructionResult:
    """2(k-1)-regular k-chromatic graph on 2k+s vertices (k even, 1 <= s <= k-2)
    with defining set u_1..u_{k-1} colored by index."""
    if k < 4 or k % 2:
        raise ParamOutOfRange(f"k must be even and at least 4, got {k}")
    if not 1 <= s <= k - 2:
        raise ParamOutOfRange(f"s must lie in 1..{k - 2}, got {s}")
    h = k // 2
    glk = build_glk(2, k, half=h, verify=False)
    ulay, vlay = glk.trace.base.labels[:k], glk.trace.base.labels[k:]

    def U(c):
        return ulay[c - 1]

    def V(c):
        return vlay[c - 1]

    def Up(i):
        return U(i + h)

    def Vp(i):
        return V(i + h)

    n_x = min(s, h - 1)
    n_y = s - n_x
    xs = [None] + [VertexLabel(Family.X, i) for i in range(1, n_x + 1)]
    ys = [None] + [VertexLabel(Family.Y, t) for t in range(1, n_y + 1)]

    # M_i pairs u_t with u_{(i+t-1)'}; index 0 unused
    cyc = [None] + cyclic_bipartite_matchings(h)
    rec = Recipe(glk.graph, BaseFamily.T3, {"k": k, "s": s})
    for i in range(1, n_x + 1):
        spare_u = pair(U(h - i), Up(h))
        spare_v = pair(V(h - i + 1), Vp(h))
        delete = [(U(a), Up(b)) for a, b in cyc[i + 1] if pair(U(a), Up(b)) != spare_u]
        delete += [(V(a), Vp(b)) for a, b in cyc[i] if pair(V(a), Vp(b)) != spare_v]
        delete.append((U(h - i), V(h - i + 1)))
        rec.apply(f"x{i}", new_vertex=xs[i], delete=delete, join_to_ends=True)

    expected = {}
    if n_y:
        if k % 4 == 0:
            a_verts = [Up(i) for i in range(1, h + 1)]
            b_verts = [V(i) for i in range(1, h + 1)]
            fa = pinned_factorization(a_verts, Up(h), [Up(t) for t in range(1, h)])
            fb = pinned_factorization(b_verts, V(h), [V(t) for t in range(1, h)])
        else:
            a_verts = [Up(i) for i in range(1, h + 1)] + [U(1)]
            b_verts = [V(i) for i in range(1, h + 1)] + [Vp(h)]
            fa = pinned_factorization(a_verts, U(1), [Up(t) for t in range(1, h + 1)])
            fb = pinned_factorization(b_verts, Vp(h), [V(t) for t in range(1, h + 1)])

        def v_side(factor):
            """F'_t with every v_i v_{i+1} swapped for v_i' v_{i+1} (an edge of
            M'_h); also returns the i of the swapped edges."""
            out, consecutive = [], []
            for a, b in _factor_edges(factor, b_verts):
                ia, ib = b_verts.index(a), b_verts.index(b)
                lo, hi = min(ia, ib) + 1, max(ia, ib) + 1
                if hi == lo + 1 and hi <= h:
                    out.append((Vp(lo), V(lo + 1)))
                    consecutive.append(lo)
                else:
                    out.append((a, b))
            return out, consecutive

        for t in range(1, n_y + 1):
            if k % 4 == 0:
                delete = [e for e in _factor_edges(fa[t - 1], a_verts) if pair(*e) != pair(Up(t), Up(h))]
                vs, consecutive = v_side(fb[t - 1])
                delete += vs
                usable = [i for i in consecutive if i != h - 1]
                if usable:
                    delete.append((V(min(usable)), Vp(h)))
                elif consecutive:
                    # only i = h-1 is on offer (k = 4): v_i would carry y's own
                    # color, so take the u-twin of the unswapped edge instead
                    delete.append((Up(_wrap(t + 1, h - 1)), Vp(h)))
                else:
                    delete.append((Vp(_wrap(t + 1, h - 1)), Vp(h)))
                anchor = t
                expected[t] = h - 1 if t == h - 1 else t + h
            else:
                partner = [next(iter(e - {Up(h)})) for e in fa[t - 1] if Up(h) in e][0]
                if partner == U(1):
                    rec.fail(f"y{t}: u_{h}' is matched with u_1, so no index j exists")
                j = a_verts.index(partner) + 1
                keep = {pair(U(1), Up(t)), pair(Up(j), Up(h))}
                delete = [e for e in _factor_edges(fa[t - 1], a_verts) if pair(*e) not in keep]
                vs, _ = v_side(fb[t - 1])
                delete += vs
                delete.append((U(j), Up(j)))
                anchor = j
                expected[t] = t + h
            delete += [(xs[i], U(_wrap(anchor + i, h))) for i in range(1, h)]
            rec.apply(f"y{t}", new_vertex=ys[t], delete=delete, join_to_ends=True)

    g = rec.freeze()
    colors = dict(glk.canonical_coloring.items())
    for x in xs[1:]:
        colors[x] = k
    for t in range(1, n_y + 1):
        c = forced_color(g, colors, ys[t], k)
        if c != expected[t]:
            rec.fail(f"{ys[t]} is forced to {c}, expected {expected[t]}")
        colors[ys[t]] = c
    coloring = ColorAssignment(k, colors)
    clique = tuple([U(i) for i in range(1, h + 1)] + [Up(h)] + [Vp(i) for i in range(1, h)])
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
