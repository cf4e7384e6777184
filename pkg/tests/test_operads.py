from __future__ import annotations

from collections import Counter
from math import comb

import pytest

from oracles import compose_oracle, graft_oracle, lincomb_as_dict
from treeoperads.algebra import LinComb, monomial
from treeoperads.enumeration import enumerate_nonplanar, enumerate_planar, enumerate_weightings, label_set
from treeoperads.operads import (
    OPERADS,
    b0_compose,
    blambda_compose,
    brace_compose,
    exponent,
    get_operad,
    graft_nonplanar,
    graft_planar,
    grafting_maps,
    nap_compose,
    olambda_compose,
    phi,
    prelie_compose,
    star,
    star_via_ladder,
    unit_tree,
)
from treeoperads.syntax import parse_tree
from treeoperads.trees import Angle, EdgeRef, TreeError, UnknownVertexError, energy, forget_planarity, relabel

L = monomial(1)


def P(text):
    return parse_tree(text, "planar")


def N(text):
    return parse_tree(text, "nonplanar")


def lc(*pairs):
    return LinComb(pairs)


# the example trees: b has weight 3 and branches of weights 2 and 1; T has
# total weight 3 and height one
EX_S = "a:1[b:3[c:2, d:1]]"
EX_T = "e:1[h:2]"


class TestGrafting:
    def test_leaf_replacement(self):
        assert graft_nonplanar(N("a[b]"), "b", N("c"), {}) == N("a[c]")

    def test_to_root_and_to_leaf(self):
        assert graft_nonplanar(N("a[b]"), "a", N("c[d]"), {EdgeRef("a", "b"): "c"}) == N("c[b,d]")
        assert graft_nonplanar(N("a[b]"), "a", N("c[d]"), {"b": "d"}) == N("c[d[b]]")

    def test_planar_single_angle(self):
        out = graft_planar(P("a[b,c]"), "a", P("e"), {"b": ("e", 0), "c": ("e", 0)})
        assert out == P("e[b,c]")

    def test_planar_corners(self):
        assert graft_planar(P("a[b]"), "a", P("c[d]"), {"b": Angle("c", 0)}) == P("c[b,d]")
        assert graft_planar(P("a[b]"), "a", P("c[d]"), {"b": Angle("d", 0)}) == P("c[d[b]]")
        assert graft_planar(P("a[b]"), "a", P("c[d]"), {"b": Angle("c", 1)}) == P("c[d,b]")

    def test_planar_rejects_decreasing_map(self):
        with pytest.raises(TreeError):
            graft_planar(P("a[b,c]"), "a", P("e[f]"), {"b": ("e", 1), "c": ("e", 0)})

    def test_map_must_cover_edges(self):
        with pytest.raises(TreeError):
            graft_nonplanar(N("a[b,c]"), "a", N("e"), {"b": "e"})

    def test_bad_target(self):
        with pytest.raises(TreeError):
            graft_nonplanar(N("a[b]"), "a", N("e"), {"b": "zz"})

    def test_label_clash(self):
        with pytest.raises(TreeError):
            prelie_compose(N("a[b]"), "a", N("b"))

    def test_unknown_vertex(self):
        with pytest.raises(UnknownVertexError):
            prelie_compose(N("a[b]"), "z", N("c"))

    def test_planarity_mismatch(self):
        with pytest.raises(TypeError):
            prelie_compose(N("a[b]"), "a", P("c"))

    def test_graft_matches_oracle(self):
        for S in enumerate_nonplanar(label_set("s", 3)):
            for T in enumerate_nonplanar(label_set("t", 3)):
                for v in S.vertices():
                    for f in grafting_maps(S, v, T):
                        g = {e.child: t for e, t in f.items()}
                        assert graft_nonplanar(S, v, T, f) == graft_oracle(S, v, T, g, planar=False)
        for S in enumerate_planar(label_set("s", 3)):
            for T in enumerate_planar(label_set("t", 3)):
                for v in S.vertices():
                    for f in grafting_maps(S, v, T):
                        g = {e.child: tuple(t) for e, t in f.items()}
                        assert graft_planar(S, v, T, f) == graft_oracle(S, v, T, g, planar=True)

    def test_total_weight_of_graft(self):
        for S in enumerate_nonplanar(label_set("s", 3)):
            for Sw in enumerate_weightings(S, 5):
                for T in enumerate_nonplanar(label_set("t", 2)):
                    for Tw in enumerate_weightings(T, 4):
                        for v in Sw.vertices():
                            for f in grafting_maps(Sw, v, Tw):
                                out = graft_nonplanar(Sw, v, Tw, f)
                                assert out.total_weight == Sw.total_weight - Sw.find(v).weight + Tw.total_weight


class TestUnweightedCompositions:
    def test_prelie_examples(self):
        assert prelie_compose(N("a[b]"), "b", N("c")) == lc((N("a[c]"), 1))
        assert prelie_compose(N("a[b]"), "a", N("c[d]")) == lc((N("c[b,d]"), 1), (N("c[d[b]]"), 1))

    def test_nap_examples(self):
        assert nap_compose(N("a[b]"), "a", N("c[d]")) == lc((N("c[b,d]"), 1))
        assert nap_compose(N("a[b]"), "b", N("c[d]")) == lc((N("a[c[d]]"), 1))

    def test_brace_examples(self):
        out = brace_compose(P("a[b]"), "a", P("c[d]"))
        assert out == lc((P("c[b,d]"), 1), (P("c[d[b]]"), 1), (P("c[d,b]"), 1))
        assert brace_compose(P("a[b,c]"), "a", P("e")) == lc((P("e[b,c]"), 1))

    def test_b0_examples(self):
        assert b0_compose(P("a[b]"), "a", P("c[d]")) == lc((P("c[b,d]"), 1), (P("c[d,b]"), 1))
        assert b0_compose(P("a[b]"), "b", P("c[d]")) == lc((P("a[c[d]]"), 1))

    def test_prelie_term_count(self):
        for S in enumerate_nonplanar(label_set("s", 4)):
            for v in S.vertices():
                for n in (1, 2, 3):
                    for T in enumerate_nonplanar(label_set("t", n))[:4]:
                        total = sum(int(c(1)) for _, c in prelie_compose(S, v, T).items())
                        assert total == n ** S.find(v).arity

    def test_nap_always_one_term(self):
        for S in enumerate_nonplanar(label_set("s", 3)):
            for T in enumerate_nonplanar(label_set("t", 3)):
                for v in S.vertices():
                    out = nap_compose(S, v, T)
                    assert len(out) == 1 and out.coefficients() == [1]

    def test_brace_single_edge_count(self):
        for T in enumerate_planar(label_set("t", 4)):
            assert len(brace_compose(P("a[b]"), "a", T)) == 2 * T.size - 1

    def test_b0_count_is_binomial(self):
        for m in range(4):
            S = P("a[" + ",".join(f"s{i}" for i in range(m)) + "]") if m else P("a")
            for k in range(4):
                T = P("t[" + ",".join(f"u{i}" for i in range(k)) + "]") if k else P("t")
                total = sum(int(c(1)) for _, c in b0_compose(S, "a", T).items())
                assert total == comb(m + k, m)

    @pytest.mark.parametrize("kind", ["prelie", "nap", "brace", "b0"])
    def test_against_oracle(self, kind):
        op = get_operad(kind)
        mode = op.mode
        from treeoperads.enumeration import enumerate_trees

        for n1 in (1, 2, 3):
            for n2 in (1, 2, 3):
                for S in enumerate_trees(label_set("s", n1), mode):
                    for T in enumerate_trees(label_set("t", n2), mode):
                        for v in S.vertices():
                            assert lincomb_as_dict(op.compose(S, v, T)) == compose_oracle(S, v, T, kind)


class TestWeightedCompositions:
    def test_example_olambda(self):
        out = olambda_compose(N(EX_S), "b", N(EX_T))
        assert len(out) == 4
        assert sorted(str(c) for c in out.coefficients()) == ["1", "L", "L^2", "L^3"]

    def test_example_blambda(self):
        out = blambda_compose(P(EX_S), "b", P(EX_T))
        assert len(out) == 6
        assert Counter(str(c) for c in out.coefficients()) == Counter({"1": 3, "L": 1, "L^2": 1, "L^3": 1})

    def test_mismatch_is_zero(self):
        assert olambda_compose(N(EX_S), "b", N("e:1[h:1]")).is_zero()
        assert blambda_compose(P(EX_S), "b", P("e:3[h:2]")).is_zero()

    def test_exponent_examples(self):
        S, T = N(EX_S), N(EX_T)
        exps = sorted(exponent(S, "b", T, f) for f in grafting_maps(S, "b", T))
        assert exps == [0, 1, 2, 3]
        Sp, Tp = P(EX_S), P(EX_T)
        exps = sorted(exponent(Sp, "b", Tp, f) for f in grafting_maps(Sp, "b", Tp))
        assert exps == [0, 0, 0, 1, 2, 3]
        for f in grafting_maps(Sp, "b", Tp, kind="root"):
            assert exponent(Sp, "b", Tp, f) == 0

    @pytest.mark.parametrize("kind", ["olambda", "blambda"])
    def test_against_oracle(self, kind):
        op = get_operad(kind)
        from treeoperads.enumeration import enumerate_trees

        for n1 in (1, 2, 3):
            for n2 in (1, 2):
                for S0 in enumerate_trees(label_set("s", n1), op.mode):
                    for S in enumerate_weightings(S0, 4):
                        for T0 in enumerate_trees(label_set("t", n2), op.mode):
                            for T in enumerate_weightings(T0, 4):
                                for v in S.vertices():
                                    assert lincomb_as_dict(op.compose(S, v, T)) == compose_oracle(S, v, T, kind)

    def test_lambda_one_is_prelie(self):
        for S0 in enumerate_nonplanar(label_set("s", 3)):
            for S in enumerate_weightings(S0, 4):
                for v in S.vertices():
                    T = N(f"t1:{S.find(v).weight}")
                    for T2 in [T] + ([N(f"t1[t2:{S.find(v).weight - 1}]")] if S.find(v).weight > 1 else []):
                        assert olambda_compose(S, v, T2).evaluate(1) == prelie_compose(S, v, T2)
                        assert olambda_compose(S, v, T2).evaluate(0) == nap_compose(S, v, T2)

    def test_moving_branch_deeper_increases_energy(self):
        for S0 in enumerate_nonplanar(label_set("s", 2)):
            for T in enumerate_nonplanar(label_set("t", 3)):
                for v in S0.vertices():
                    for f in grafting_maps(S0, v, T):
                        base = energy(graft_nonplanar(S0, v, T, f))
                        depth = {x: 0 for x in T.vertices()}
                        for x in T.vertices():
                            y = x
                            while T.parent_of(y) is not None:
                                y = T.parent_of(y)
                                depth[x] += 1
                        for e in f:
                            for x in T.vertices():
                                if depth[x] > depth[f[e]]:
                                    g = dict(f)
                                    g[e] = x
                                    assert energy(graft_nonplanar(S0, v, T, g)) > base


class TestUnit:
    @pytest.mark.parametrize("kind", ["olambda", "blambda"])
    def test_weighted_unit(self, kind):
        op = get_operad(kind)
        S = parse_tree("a:2[b:3, c:1]", op.mode)
        for v in S.vertices():
            e = unit_tree("x", S.find(v).weight, op.mode)
            assert op.compose(S, v, e) == lc((relabel(S, lambda y: "x" if y == v else y), 1))
        assert op.compose(unit_tree("x", S.total_weight, op.mode), "x", S) == lc((S, 1))
        assert op.compose(unit_tree("x", 1, op.mode), "x", S).is_zero()

    def test_unit_tree_mode(self):
        assert unit_tree("x", 2, "planar").planar
        with pytest.raises(ValueError):
            unit_tree("x", 1, "wrong")


class TestStarAndPhi:
    def test_star_examples(self):
        assert star(P("r"), P("s[t]")) == lc((P("r[s[t]]"), 1))
        assert star(P("r[t]"), P("s")) == lc((P("r[s,t]"), 1), (P("r[t,s]"), 1))

    def test_star_matches_ladder(self):
        for T in enumerate_planar(label_set("t", 3)):
            for S in enumerate_planar(label_set("s", 2)):
                assert star(T, S) == star_via_ladder(T, S)

    def test_phi_examples(self):
        assert phi(N("a")) == lc((P("a"), 1))
        assert phi(N("a[b,c]")) == lc((P("a[b,c]"), 1), (P("a[c,b]"), 1))

    def test_phi_terms_are_the_planar_representatives(self):
        planar = {}
        for t in enumerate_planar(label_set("v", 4)):
            planar.setdefault(forget_planarity(t), set()).add(t)
        for t in enumerate_nonplanar(label_set("v", 4)):
            terms = phi(t)
            assert set(terms.basis_elements()) == planar[t]
            assert all(c == 1 for c in terms.coefficients())

    def test_phi_keeps_weights(self):
        assert phi(N("a:2[b:3]")) == lc((P("a:2[b:3]"), 1))

    def test_phi_rejects_planar(self):
        with pytest.raises(TypeError):
            phi(P("a"))


def test_registry():
    assert set(OPERADS) == {"prelie", "nap", "brace", "b0", "olambda", "blambda"}
    with pytest.raises(ValueError):
        get_operad("nope")
