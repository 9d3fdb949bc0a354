"""Order 3k-1: three joined layers with one middle vertex removed."""

from __future__ import annotations

from ..coloring import ColorAssignment
from ..factorizations import one_factorization, two_factorization
from ..graph import Family, VertexLabel
from ..trace import BaseFamily
from .common import (
    ConstructionResult,
    ParamOutOfRange,
    ParityViolation,
    Recipe,
    TEqualsKMinus2,
    build_glk,
    checked,
)


def _wrap(i: int, m: int) -> int:
    return (i - 1) % m + 1


def build_theorem1(k: int, t: int, verify: bool = True) -> ConstructionResult:
    """(2(k-1)+t)-regular k-chromatic graph on 3k-1 vertices whose defining set
    is u_1..u_{k-1}.

    v_k is removed and its neighbours re-paired as u_i w_{i+1}; each extra unit
    of degree adds one shifted u-w matching plus one perfect matching on
    v_1..v_{k-1} (k odd) or half a Hamiltonian cycle there (k even).
    """
    if k < 3:
        raise ParamOutOfRange(f"k must be at least 3, got {k}")
    if t == k - 2:
        raise TEqualsKMinus2(f"no {3 * (k - 1) - 1}-regular {k}-chromatic graph on {3 * k - 1} vertices")
    if not 0 <= t <= k - 3:
        raise ParamOutOfRange(f"t must lie in 0..{k - 3}, got {t}")
    if k % 2 == 0 and t % 2:
        raise ParityViolation(f"n={3 * k - 1} is odd so r={2 * (k - 1) + t} must be even")

    glk = build_glk(3, k, verify=False)
    u = [None] + [VertexLabel(Family.U, i) for i in range(1, k + 1)]
    v = [None] + [VertexLabel(Family.V, i) for i in range(1, k + 1)]
    w = [None] + [VertexLabel(Family.W, i) for i in range(1, k + 1)]

    rec = Recipe(glk.graph, BaseFamily.T1, {"k": k, "t": t})
    repair = [(u[i], w[i + 1]) for i in range(1, k - 1)] + [(u[k - 1], w[1])]
    rec.apply("remove v_k", removed_vertex=v[k], add=repair)

    if t:
        extra = [(u[i], w[_wrap(i + j + 2, k)]) for i in range(1, k + 1) for j in range(1, t + 1)]
        middle = v[1:k]
        if k % 2:
            factors = one_factorization(middle).factors[:t]
        else:
            factors = two_factorization(middle, t // 2).factors
        for f in factors:
            extra += [tuple(sorted(e, key=middle.index)) for e in sorted(f, key=lambda e: sorted(map(middle.index, e)))]
        rec.apply(f"raise degree by {t}", add=extra)

    g = rec.freeze()
    colors = {lb: c for lb, c in glk.canonical_coloring.items() if lb in g}
    coloring = ColorAssignment(k, colors)
    res = ConstructionResult(
        graph=g,
        canonical_coloring=coloring,
        defining_set=coloring.restrict(u[1:k]),
        trace=rec.trace,
        claimed_r=2 * (k - 1) + t,
        claimed_k=k,
        clique=tuple(u[1:]),
    )
    return checked(res, verify)
