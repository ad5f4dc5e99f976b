from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import digraphs
from homodigraph.digraph import (BipartiteGraph, Digraph, bfs_depths, enumerate_connected_subdigraphs,
                                 induced_subdigraph, neighbourhood, weak_components)
from homodigraph.errors import InputError
from homodigraph.families import build, complete, cp, cycle
from homodigraph.families.base import finite_ball
from homodigraph.iso import find_isomorphisms, is_isomap
from homodigraph.symmetry import (EXACT_FALSE, EXACT_TRUE, INCONCLUSIVE, REFUTED, VERIFIED,
                                  check_bipartite_c_homogeneity, check_c_homogeneity,
                                  check_homogeneous_bipartite, check_k_arc_transitivity, k_arcs,
                                  verify_bipartite_witness, verify_k_arc_witness, verify_witness)


def p4() -> BipartiteGraph:
    # a - b - c - d with X = {a, c}
    return BipartiteGraph([0, 2], [1, 3], [(0, 1), (2, 1), (2, 3)])


def test_k_arcs_enumeration():
    g = Digraph.from_arcs([(0, 1), (1, 2), (2, 0)])
    assert list(k_arcs(g, 2)) == [(0, 1, 2), (1, 2, 0), (2, 0, 1)]


def test_k_arc_examples():
    t = build("t:3@r3")
    rep = check_k_arc_transitivity(t.ball, 2, 1)
    assert rep.verdict == REFUTED
    assert verify_k_arc_witness(t.graph, rep.witness)
    assert check_k_arc_transitivity(build("dl:kb:2,2@r4").ball, 3, 1).verdict == VERIFIED
    assert check_k_arc_transitivity(build("j:2@m4").ball, 2, 1).verdict == VERIFIED


def test_k_arc_rejects_bad_t():
    with pytest.raises(InputError):
        check_k_arc_transitivity(build("j:2@m3").ball, 1, 0)


def test_c_homogeneity_verified_examples():
    rep = check_c_homogeneity(build("y:3@d3").ball, 5, 2, stop_first=False)
    assert rep.verdict == VERIFIED and rep.failed == 0
    assert rep.params == {"s": 5, "t": 2}


def test_y5_first_refutation_needs_eight_vertices():
    b = build("y:5@d2")
    assert check_c_homogeneity(b.ball, 7, 1).verdict == VERIFIED
    rep = check_c_homogeneity(b.ball, 8, 1)
    assert rep.verdict == REFUTED
    assert len(rep.witness["source"]) == 8
    assert verify_witness(b.graph, rep.witness)


def test_line_j2_refuted_at_five():
    lb = build("line(j:2@m4)")
    assert check_c_homogeneity(lb.ball, 4, 2).verdict == VERIFIED
    rep = check_c_homogeneity(lb.ball, 5, 1)
    assert rep.verdict == REFUTED and verify_witness(lb.graph, rep.witness)


@pytest.mark.parametrize("spec,s,t,bigger", [
    ("line(j:2@m4)", 5, 1, [("line(j:2@m4)", 6, 1), ("line(j:2@m4)", 5, 2), ("line(j:2@m5)", 6, 2)]),
    ("y:5@d2", 8, 1, [("y:5@d2", 9, 1), ("y:5@d3", 8, 2)]),
])
def test_refutations_are_monotone(spec, s, t, bigger):
    assert check_c_homogeneity(build(spec).ball, s, t).verdict == REFUTED
    for sp, s2, t2 in bigger:
        lb = build(sp)
        rep = check_c_homogeneity(lb.ball, s2, t2)
        assert rep.verdict == REFUTED, (sp, s2, t2)
        assert verify_witness(lb.graph, rep.witness)


def test_inconclusive_without_deep_vertices():
    lb = build("j:2@m1")
    assert check_c_homogeneity(lb.ball, 2, 3).verdict == INCONCLUSIVE


def test_tampered_witness_does_not_verify():
    lb = build("line(j:2@m4)")
    rep = check_c_homogeneity(lb.ball, 5, 1)
    w = dict(rep.witness)
    w["targetNbhd"] = set(w["sourceNbhd"])
    w["target"] = set(w["source"])
    w["map"] = {v: v for v in w["source"]}
    assert not verify_witness(lb.graph, w)


def test_bipartite_exact_checks():
    assert check_bipartite_c_homogeneity(cp(4)).verdict == EXACT_TRUE
    assert check_bipartite_c_homogeneity(complete(3, 5)).verdict == EXACT_TRUE
    assert check_bipartite_c_homogeneity(cycle(8)).verdict == EXACT_TRUE
    rep = check_bipartite_c_homogeneity(p4())
    assert rep.verdict == EXACT_FALSE and verify_bipartite_witness(p4(), rep.witness)
    with pytest.raises(InputError):
        check_bipartite_c_homogeneity(cp(2))


def test_bipartite_homogeneity():
    matching = BipartiteGraph([0, 1, 2], [3, 4, 5], [(0, 3), (1, 4), (2, 5)])
    assert check_homogeneous_bipartite(matching).verdict == EXACT_TRUE
    assert check_homogeneous_bipartite(cp(3)).verdict == EXACT_TRUE
    rep = check_homogeneous_bipartite(p4())
    assert rep.verdict == EXACT_FALSE and verify_bipartite_witness(p4(), rep.witness)


# ---------------------------------------------------------------- oracle comparisons

def _brute_extends(g, phi, dom, cod):
    dom, cod = sorted(dom), sorted(cod)
    if len(dom) != len(cod) or not set(phi.values()) <= set(cod):
        return False
    rest = [v for v in dom if v not in phi]
    free = [v for v in cod if v not in phi.values()]
    for img in itertools.permutations(free):
        m = dict(phi)
        m.update(zip(rest, img))
        if is_isomap(g, g, m):
            return True
    return False


def brute_c_homogeneous(ball, s, t) -> bool:
    """Every isomorphism between every pair of small deep subsets extends."""
    g = ball.graph
    deep = ball.deep_interior(t)
    inner = induced_subdigraph(g, deep)
    subsets = list(enumerate_connected_subdigraphs(inner, s))
    for s1, s2 in itertools.product(subsets, repeat=2):
        if len(s1) != len(s2):
            continue
        g1, g2 = induced_subdigraph(g, s1), induced_subdigraph(g, s2)
        for phi in find_isomorphisms(g1, g2, None):
            if not _brute_extends(g, phi, neighbourhood(g, s1, t), neighbourhood(g, s2, t)):
                return False
    return True


@st.composite
def connected_balls(draw, max_vertices=6):
    g = draw(digraphs(max_vertices=max_vertices, min_vertices=1))
    comp = weak_components(g)[0]
    g = induced_subdigraph(g, comp)
    return finite_ball(g, [g.vertices[0]])


@settings(max_examples=60, deadline=None)
@given(connected_balls(), st.integers(1, 3), st.integers(1, 2))
def test_type_engine_matches_brute_force(b, s, t):
    rep = check_c_homogeneity(b, s, t)
    assert (rep.verdict == VERIFIED) == brute_c_homogeneous(b, s, t)
    if rep.verdict == REFUTED:
        assert verify_witness(b.graph, rep.witness)


def pairwise_c_homogeneous(ball, s, t) -> bool:
    """Every pair, every isomorphism, no type reduction."""
    from homodigraph.iso import extend_isomorphism
    g = ball.graph
    inner = induced_subdigraph(g, ball.deep_interior(t))
    subsets = list(enumerate_connected_subdigraphs(inner, s))
    for s1, s2 in itertools.product(subsets, repeat=2):
        if len(s1) != len(s2):
            continue
        for phi in find_isomorphisms(induced_subdigraph(g, s1), induced_subdigraph(g, s2), None):
            if extend_isomorphism(g, phi, neighbourhood(g, s1, t),
                                  codomain=neighbourhood(g, s2, t)) is None:
                return False
    return True


@pytest.mark.parametrize("spec,s,t", [("j:2@m3", 3, 1), ("j:2@m3", 3, 2), ("line(j:2@m3)", 3, 1),
                                      ("line(j:2@m3)", 5, 1), ("t:2@r3", 3, 1)])
def test_type_engine_matches_pairwise_search_on_balls(spec, s, t):
    lb = build(spec)
    rep = check_c_homogeneity(lb.ball, s, t)
    assert (rep.verdict == VERIFIED) == pairwise_c_homogeneous(lb.ball, s, t)


@st.composite
def connected_bipartite(draw):
    nx_ = draw(st.integers(1, 3))
    ny = draw(st.integers(1, 3))
    xs, ys = list(range(nx_)), list(range(nx_, nx_ + ny))
    edges = [e for e in itertools.product(xs, ys) if draw(st.booleans())]
    b = BipartiteGraph(xs, ys, edges)
    if not b.is_connected():
        b = complete(nx_, ny)
    return b


@settings(max_examples=60, deadline=None)
@given(connected_bipartite())
def test_exact_mode_agreement(b):
    g = b.to_digraph()
    ball = finite_ball(g, [g.vertices[0]])
    diameter = max(max(bfs_depths(g, [v]).values()) for v in g.vertices)
    colors = b.part_colors()
    ball_rep = check_c_homogeneity(ball, len(g), max(diameter, 1), colors=colors)
    exact = check_bipartite_c_homogeneity(b)
    assert (ball_rep.verdict == VERIFIED) == (exact.verdict == EXACT_TRUE)
    if ball_rep.verdict == REFUTED:
        assert verify_witness(g, ball_rep.witness, colors)
