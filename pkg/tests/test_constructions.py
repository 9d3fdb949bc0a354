import itertools

import pytest

from regdef.coloring import ColorAssignment, chromatic_number, count_extensions
from regdef.constructions import (
    EdgeNotInGraph,
    ImproperInputColoring,
    InternalRecipeInconsistency,
    LabelCollision,
    ParamOutOfRange,
    ParityViolation,
    Reason,
    TEqualsKMinus2,
    audit,
    build_glk,
    build_theorem1,
    build_theorem2,
    build_theorem3,
    build_theorem4,
    chromatic_join,
    feasibility,
    nonessential_check,
    theorem2_nonessential_edges,
)
from regdef.graph import Family, complete_graph, is_regular, lab, make_graph, plain_labels
from regdef.sweep import instances
from regdef.tables import canonical_column, parse_edge

from oracles import naive_count_extensions


def k_colored(n, family=Family.U, colors=None):
    g = complete_graph(n, family)
    cols = colors or list(range(1, n + 1))
    return g, ColorAssignment(max(cols), dict(zip(g.labels, cols)))


class TestChromaticJoin:
    def test_single_vertices(self):
        g, cg = k_colored(1)
        h, ch = k_colored(1, Family.V)
        assert chromatic_join(g, cg, h, ch).num_edges == 0
        h2 = make_graph(["v1"], [])
        joined = chromatic_join(g, cg, h2, ColorAssignment(2, {"v1": 2}))
        assert joined.num_edges == 1

    def test_octahedron(self):
        g, cg = k_colored(3)
        h, ch = k_colored(3, Family.V)
        j = chromatic_join(g, cg, h, ch)
        assert j.n == 6 and is_regular(j, 4) and chromatic_number(j) == 3
        assert not any(j.has_edge(f"u{i}", f"v{i}") for i in range(1, 4))

    def test_degree_law_exhaustive(self):
        # every 3-coloring pattern of K_1..K_3 against every pattern of an edgeless graph
        for n in range(1, 4):
            g, cg = k_colored(n)
            for m in range(1, 4):
                h = make_graph(plain_labels(m, Family.V), [])
                for pattern in itertools.product(range(1, 4), repeat=m):
                    ch = ColorAssignment(3, dict(zip(h.labels, pattern)))
                    j = chromatic_join(g, ColorAssignment(3, dict(cg.items())), h, ch)
                    for x in g.labels:
                        want = (n - 1) + sum(1 for y in h.labels if ch[y] != cg[x])
                        assert j.degree(j.index(x)) == want

    def test_errors(self):
        g, cg = k_colored(2)
        with pytest.raises(LabelCollision):
            chromatic_join(g, cg, g, cg)
        h, _ = k_colored(2, Family.V)
        with pytest.raises(ImproperInputColoring):
            chromatic_join(g, cg, h, ColorAssignment(2, {"v1": 1, "v2": 1}))


class TestGlk:
    def test_octahedron(self):
        res = build_glk(2, 3)
        assert res.n == 6 and is_regular(res.graph, 4)
        assert dict(res.defining_set.items()) == {lab("u1"): 1, lab("u2"): 2}
        assert naive_count_extensions(res.graph, {"u1": 1, "u2": 2}, 3) == 1

    def test_c4(self):
        res = build_glk(2, 2)
        assert res.n == 4 and is_regular(res.graph, 2) and len(res.defining_set) == 1
        assert chromatic_number(res.graph) == 2

    def test_three_layers(self):
        res = build_glk(3, 5)
        assert (res.n, res.claimed_r, len(res.defining_set)) == (15, 8, 4)

    @pytest.mark.parametrize("l", range(2, 6))
    @pytest.mark.parametrize("k", range(2, 9))
    def test_regular(self, l, k):
        assert is_regular(build_glk(l, k, verify=False).graph, 2 * (k - 1))

    def test_errors(self):
        with pytest.raises(ParamOutOfRange):
            build_glk(1, 3)
        with pytest.raises(ParamOutOfRange):
            build_glk(2, 1)


class TestTheorem1:
    def test_figure_instance(self):
        res = build_theorem1(5, 0)
        assert res.summary() == "n=14 r=8 k=5 |S|=4"

    def test_k3(self):
        res = build_theorem1(3, 0)
        assert (res.n, res.claimed_r) == (8, 4)

    def test_errors(self):
        with pytest.raises(TEqualsKMinus2):
            build_theorem1(5, 3)
        with pytest.raises(ParityViolation):
            build_theorem1(6, 1)
        with pytest.raises(ParamOutOfRange):
            build_theorem1(5, 4)
        with pytest.raises(ParamOutOfRange):
            build_theorem1(2, 0)


class TestTheorem2:
    def test_first_column(self):
        res = build_theorem2(7, 1)
        (x, deleted), = res.trace.new_vertex_columns()
        want = ["u1u1'", "u2u2'", "u3u3'", "v1v1'", "v2v2'", "v3v3'"]
        assert canonical_column(res.graph, deleted) == canonical_column(res.graph, map(parse_edge, want))
        assert (res.n, res.claimed_r) == (15, 12)

    def test_largest(self):
        res = build_theorem2(7, 5)
        assert (res.n, res.claimed_r, len(res.defining_set)) == (19, 12, 6)

    def test_smallest(self):
        assert build_theorem2(3, 1).summary() == "n=7 r=4 k=3 |S|=2"

    def test_nonessential_set(self):
        res = build_theorem2(7, 3)
        f = theorem2_nonessential_edges(res)
        assert f and nonessential_check(res.graph, res.defining_set, f)

    def test_errors(self):
        with pytest.raises(ParamOutOfRange):
            build_theorem2(6, 1)
        with pytest.raises(ParamOutOfRange):
            build_theorem2(7, 6)


class TestTheorem3:
    def test_first_column(self):
        res = build_theorem3(8, 1)
        (x, deleted), = res.trace.new_vertex_columns()
        want = ["u1u2'", "u2u3'", "u4u1'", "v1v1'", "v2v2'", "v3v3'", "u3v4"]
        assert canonical_column(res.graph, deleted) == canonical_column(res.graph, map(parse_edge, want))

    def test_largest(self):
        res = build_theorem3(8, 6)
        assert (res.n, res.claimed_r, len(res.defining_set)) == (22, 14, 7)

    def test_smallest(self):
        assert build_theorem3(4, 1).summary() == "n=9 r=6 k=4 |S|=3"

    def test_errors(self):
        with pytest.raises(ParamOutOfRange):
            build_theorem3(5, 1)
        with pytest.raises(ParamOutOfRange):
            build_theorem3(8, 7)


class TestTheorem4:
    def test_examples(self):
        assert build_theorem4(4, 2, 1).summary() == "n=10 r=7 k=4 |S|=3"
        assert build_theorem4(5, 3, 2).summary() == "n=13 r=10 k=5 |S|=4"

    def test_errors(self):
        with pytest.raises(ParamOutOfRange):
            build_theorem4(5, 3, 3)
        with pytest.raises(ParityViolation):
            build_theorem4(7, 3, 1)
        with pytest.raises(ParamOutOfRange):
            build_theorem4(3, 1, 0)

    def test_recipe_failure_is_reported(self):
        # beyond the verified range the prescribed matchings can run into
        # edges already removed; this must surface, not return a bad graph
        with pytest.raises(InternalRecipeInconsistency) as info:
            build_theorem4(11, 8, 1, verify=False)
        assert info.value.trace is not None


class TestFeasibility:
    def test_examples(self):
        assert feasibility(14, 8, 5).feasible
        assert feasibility(15, 9, 5).reason is Reason.BOTH_ODD
        assert feasibility(14, 11, 5).reason is Reason.T_EQUALS_K_MINUS_2
        assert feasibility(9, 8, 5).reason is Reason.TOO_FEW_VERTICES
        assert feasibility(13, 11, 5).reason is Reason.RATIO_VIOLATED
        assert feasibility(0, 1, 1).reason is Reason.PARAM_OUT_OF_RANGE

    def test_builders_agree_with_feasibility(self):
        for inst in instances(8):
            res = inst.build()
            assert feasibility(res.n, res.claimed_r, res.claimed_k).feasible, inst

    def test_theorem1_rejections_match(self):
        for k in range(3, 9):
            for t in range(0, k - 1):
                v = feasibility(3 * k - 1, 2 * (k - 1) + t, k)
                try:
                    build_theorem1(k, t, verify=False)
                    built = True
                except (TEqualsKMinus2, ParityViolation):
                    built = False
                assert built == v.feasible, (k, t, v)


class TestNonessential:
    def test_empty_set(self):
        res = build_glk(2, 3)
        assert nonessential_check(res.graph, res.defining_set, [])

    def test_octahedron_edge(self):
        # frozen from the brute-force oracle: chi stays 3 and the count stays 1
        res = build_glk(2, 3)
        assert nonessential_check(res.graph, res.defining_set, [(lab("u3"), lab("v1"))])

    def test_essential_pair(self):
        # dropping u1u3 and u1v3 leaves two extensions (oracle count)
        res = build_glk(2, 3)
        f = [(lab("u1"), lab("u3")), (lab("u1"), lab("v3"))]
        assert naive_count_extensions(res.graph.without_edges(f), {"u1": 1, "u2": 2}, 3) == 2
        assert not nonessential_check(res.graph, res.defining_set, f)

    def test_missing_edge(self):
        res = build_glk(2, 3)
        with pytest.raises(EdgeNotInGraph):
            nonessential_check(res.graph, res.defining_set, [(lab("u1"), lab("v1"))])


@pytest.mark.parametrize("inst", instances(8), ids=str)
def test_every_instance_audits(inst):
    res = inst.build()
    rep = audit(res)
    assert rep.ok, rep.notes
    assert res.trace.replay().same_as(res.graph)
    clique_colors = {res.canonical_coloring[v] for v in res.clique}
    assert clique_colors == set(range(1, res.claimed_k + 1))
    assert count_extensions(res.graph, res.defining_set, res.claimed_k) == 1
