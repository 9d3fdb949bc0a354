"""(2(k-1)+t)-regular k-chromatic graphs on 2k+s vertices, 1 <= t < s <= k-2.

Start from the two-layer chain, add x_1..x_s with x_i adjacent to every layer
vertex except u_i and v_i, put t units of degree among the x's, then shave the
surplus degree off the layers with matchings.

Within each layer the indices are cut into four consecutive blocks
A = 1..a, C = a+1..s, D = s+1..s+b, B = s+b+1..k with a = floor(s/2) and
b = floor((k-s)/2).
"""

from __future__ import annotations

from ..coloring import ColorAssignment
from ..factorizations import maximal_bipartite_matching, one_factorization, two_factorization, NoSuchMatching
from ..graph import Family, VertexLabel
from ..trace import BaseFamily
from .common import ConstructionResult, ParamOutOfRange, ParityViolation, Recipe, build_glk, checked


def _edges(matching, order) -> list:
    pos = {v: i for i, v in enumerate(order)}
    out = [tuple(sorted(e, key=pos.__getitem__)) for e in matching]
    return sorted(out, key=lambda e: (pos[e[0]], pos[e[1]]))


def build_theorem4(k: int, s: int, t: int, verify: bool = True) -> ConstructionResult:
    """Defining set {x_2..x_s, v_{s+1}..v_k}, every vertex colored by its index."""
    if k < 4:
        raise ParamOutOfRange(f"k must be at least 4, got {k}")
    if not 0 <= s <= k - 2:
        raise ParamOutOfRange(f"s must lie in 0..{k - 2}, got {s}")
    if not 1 <= t < s:
        raise ParamOutOfRange(f"need 1 <= t < s, got t={t}, s={s}")
    if s % 2 and t % 2:
        raise ParityViolation(f"n={2 * k + s} is odd so r={2 * (k - 1) + t} must be even")

    a, b = s // 2, (k - s) // 2
    U = [None] + [VertexLabel(Family.U, i) for i in range(1, k + 1)]
    V = [None] + [VertexLabel(Family.V, i) for i in range(1, k + 1)]
    X = [None] + [VertexLabel(Family.X, i) for i in range(1, s + 1)]

    def block(layer, lo, hi):
        return [layer[i] for i in range(lo, hi + 1)]

    A, C, D, B = block(U, 1, a), block(U, a + 1, s), block(U, s + 1, s + b), block(U, s + b + 1, k)
    A2, C2, D2, B2 = block(V, 1, a), block(V, a + 1, s), block(V, s + 1, s + b), block(V, s + b + 1, k)
    order = U[1:] + V[1:] + X[1:]

    glk = build_glk(2, k, verify=False)
    rec = Recipe(glk.graph, BaseFamily.T4, {"k": k, "s": s, "t": t})
    for i in range(1, s + 1):
        nbrs = [U[j] for j in range(1, k + 1) if j != i] + [V[j] for j in range(1, k + 1) if j != i]
        rec.apply(f"x{i}", new_vertex=X[i], add=[(X[i], w) for w in nbrs])
    xs = X[1:]
    factors = one_factorization(xs).factors[:t] if s % 2 == 0 else two_factorization(xs, t // 2).factors
    rec.apply("x factors", add=[e for f in factors for e in _edges(f, order)])

    def matching(part1, part2, unsat, used, note):
        try:
            return maximal_bipartite_matching(part1, part2, unsat, used)
        except NoSuchMatching as exc:
            rec.fail(f"{note}: {exc}")

    # step 1: one matching between B and D in each layer
    odd_gap = (k - s) % 2 == 1
    used_u = matching(B, D, [U[k - 1]] if odd_gap else [], (), "B-D matching")
    used_v = matching(B2, D2, [V[k]] if odd_gap else [], (), "B'-D' matching")
    delete = _edges(used_u, order) + _edges(used_v, order)
    if odd_gap:
        delete.append((U[k - 1], V[k]))
    rec.apply("step 1", delete=delete)
    used_u, used_v = set(used_u), set(used_v)

    # step 2: disjoint matchings between A+B and C+D in each layer
    q = s - t - 1
    n2 = min(q, k // 2 - 1)
    n3 = q - n2
    if k % 2:
        if s % 2 == 0:
            uidx = list(range(1, a + 1)) + [s + b + 1 + m for m in range(max(0, q - a))]
            vidx = list(range(2, a + 1)) + [1] + [s + b + 2 + m for m in range(max(0, q - a))]
        else:
            uidx = [a + 1 + m for m in range(q)]
            vidx = list(range(a + 2, s + 1)) + [a + 1] + [s + 2 + m for m in range(max(0, q - len(C2)))]
        uidx, vidx = uidx[:n2], vidx[:n2]
        if len(uidx) < n2 or len(vidx) < n2 or max(uidx + vidx, default=0) > k:
            rec.fail("prescribed unsaturated vertices run out of range")
        ulist, vlist = [U[i] for i in uidx], [V[i] for i in vidx]
    for i in range(n2):
        unsat_u = [ulist[i]] if k % 2 else []
        unsat_v = [vlist[i]] if k % 2 else []
        mu = matching(A + B, C + D, unsat_u, used_u, f"step 2 matching {i + 1} (u)")
        mv = matching(A2 + B2, C2 + D2, unsat_v, used_v, f"step 2 matching {i + 1} (v)")
        used_u |= mu
        used_v |= mv
        delete = _edges(mu, order) + _edges(mv, order)
        if k % 2:
            delete.append((ulist[i], vlist[i]))
        rec.apply(f"step 2 matching {i + 1}", delete=delete)

    # step 3: shifted 1-factors across the layers, C+D to C'+D' and A+B to A'+B'
    for j in range(1, n3 + 1):
        delete = []
        for left, right in ((C + D, C2 + D2), (A + B, A2 + B2)):
            m = len(left)
            delete += [(left[i], right[(i + j + 1) % m]) for i in range(m)]
        rec.apply(f"step 3 factor {j}", delete=delete)

    g = rec.freeze()
    colors = {U[i]: i for i in range(1, k + 1)}
    colors.update({V[i]: i for i in range(1, k + 1)})
    colors.update({X[i]: i for i in range(1, s + 1)})
    coloring = ColorAssignment(k, colors)
    res = ConstructionResult(
        graph=g,
        canonical_coloring=coloring,
        defining_set=coloring.restrict(X[2:] + V[s + 1 :]),
        trace=rec.trace,
        claimed_r=2 * (k - 1) + t,
        claimed_k=k,
        clique=tuple(A + B + C2 + D2),
    )
    return checked(res, verify)
