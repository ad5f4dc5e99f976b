from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import d3, digraphs
from homodigraph.digraph import BipartiteGraph, Digraph, weak_components
from homodigraph.errors import InputError
from homodigraph.families import (build, complete, cp, cycle, make_directed_tree_ball,
                                  make_j_segment, tree_fragment)
from homodigraph.iso import automorphisms, is_isomorphic
from homodigraph.reachability import (all_reports, alternating_closure, arc_classes,
                                      classify_bipartite_shape, complete_classes,
                                      intersection_digraph, intersection_fragment,
                                      match_free_product_fragment, match_relation,
                                      reachability_digraph)


def test_triangle_classes_are_singletons():
    p = arc_classes(d3())
    assert sorted(len(c) for c in p.classes) == [1, 1, 1]


def test_j2_classes_are_level_pairs():
    lb = make_j_segment(2, 3)
    p = arc_classes(lb.graph)
    assert len(p.classes) == 6
    level = {v: int(lb.labels[v][1:].split(",")[0]) for v in lb.graph.vertices}
    for c in p.classes:
        assert len({level[u] for u, _ in c}) == 1
        assert is_isomorphic(Digraph.from_arcs(c), complete(2, 2).to_digraph())


def test_out_tree_classes_are_stars():
    lb = make_directed_tree_ball(3, 1, 3)  # out-degree 3, in-degree 1
    g = lb.graph
    for c in arc_classes(g).classes:
        tails = {u for u, _ in c}
        assert len(tails) == 1
        (u,) = tails
        assert c == {(u, w) for w in g.out(u)}


@settings(max_examples=150, deadline=None)
@given(digraphs(max_vertices=8))
def test_arc_classes_match_alternating_closure(g):
    p = arc_classes(g)
    covered = set()
    for c in p.classes:
        e = min(c)
        assert alternating_closure(g, e) == c
        covered |= c
        for a in c:
            assert p.class_of[a] == p.class_of[e]
    assert covered == set(g.arcs)
    assert sum(len(c) for c in p.classes) == len(g.arcs)


def test_classify_shapes():
    assert classify_bipartite_shape(cycle(6)) == "cp(3)"
    assert classify_bipartite_shape(complete(1, 1)) == "complete-bipartite(1,1)"
    assert classify_bipartite_shape(complete(1, 4)) == "complete-bipartite(1,4)"
    assert classify_bipartite_shape(complete(2, 2)) == "complete-bipartite(2,2)"
    assert classify_bipartite_shape(cycle(8)) == "cycle(8)"
    assert classify_bipartite_shape(cp(4)) == "cp(4)"
    assert classify_bipartite_shape(tree_fragment(2, 3, 3)) == "tree-fragment(2,3)"
    with pytest.raises(InputError):
        classify_bipartite_shape(cp(2))


def test_reachability_examples():
    lb = build("m:4,3@r3")
    b = lb.ball
    arc = min(a for a in lb.graph.arcs if b.center in a)
    rep = reachability_digraph(b, arc)
    assert rep.family == "cp(4)" and rep.completeness == "complete"
    y = build("y:5@d2").ball
    arc = min(a for a in y.graph.arcs if y.center in a)
    assert reachability_digraph(y, arc).family == "cycle(10)"
    with pytest.raises(InputError):
        reachability_digraph(d3(), (1, 0))


def test_t_ball_classes_are_clipped_trees():
    # each class is an infinite tree; its finite pieces never come out complete
    lb = build("t:3@r3")
    reps = all_reports(lb.ball)
    assert all(r.completeness == "boundary-clipped" for r in reps)
    assert not any(r.universal_at_scale for r in reps)
    arc = min(a for a in lb.graph.arcs if lb.ball.center in a)
    assert reachability_digraph(lb.ball, arc).family.startswith("tree-fragment")


def test_universal_flag_on_complete_relation():
    # a single oriented K_{2,2}: its one class holds every arc
    g = complete(2, 2).to_digraph()
    rep = reachability_digraph(g, min(g.arcs))
    assert rep.universal_at_scale and rep.family == "complete-bipartite(2,2)"


def test_family_tag_non_bipartite_only_with_odd_cycle():
    # two arcs out of 0 and two into 3, plus a chord making an odd alternating cycle
    g = Digraph.from_arcs([(0, 1), (0, 2), (1, 3), (2, 3), (4, 3), (4, 1)])
    for r in all_reports(g):
        if r.family == "non-bipartite":
            from homodigraph.digraph import has_odd_cycle
            assert has_odd_cycle(r.delta)


@pytest.mark.parametrize("spec", ["dl:cp:3@r4", "j:2@m4", "m:3,2@r4", "y:4@d2"])
def test_complete_delta_connected_and_arc_transitive(spec):
    lb = build(spec)
    for r in all_reports(lb.ball):
        if r.completeness != "complete":
            continue
        assert len(weak_components(r.delta)) == 1
        auts = automorphisms(r.delta)
        e = min(r.arcs)
        assert {(a[e[0]], a[e[1]]) for a in auts} == set(r.arcs)


def test_intersection_digraph_j2_is_a_line():
    lb = make_j_segment(2, 3)
    inter = intersection_digraph(lb.graph)
    g = inter.as_digraph()
    assert len(g.arcs) == len(g) - 1
    assert all(g.out_degree(v) <= 1 and g.in_degree(v) <= 1 for v in g.vertices)
    for (c1, c2), (x, y, z) in inter.witnesses.items():
        p = arc_classes(lb.graph)
        assert p.class_of[(x, y)] == c1 and p.class_of[(y, z)] == c2


def test_intersection_m32_is_trivalent_tree():
    lb = build("m:3,2@r4")
    frag = intersection_fragment(lb.ball)
    assert not frag.arcs
    assert len(frag.edges) == len(frag.vertices) - 1
    assert max(len(frag.und(v)) for v in frag.vertices) == 3
    assert match_free_product_fragment(frag, 3, 2) is not None


def test_intersection_m43_is_free_product_fragment():
    lb = build("m:4,3@r4")
    frag = intersection_fragment(lb.ball)
    hit = match_free_product_fragment(frag, 4, 3)
    assert hit is not None and hit[0] == 2


def test_match_relation():
    k22 = complete(2, 2).to_digraph()
    assert not match_relation(k22).pairs
    lb = build("m:3,2@r4")
    mr = match_relation(lb.graph)
    for x in lb.ball.deep_interior(3):
        assert len(mr.out_of(x)) == 1 and len(mr.in_of(x)) == 1
    for (x, y), (z, t) in mr.witnesses.items():
        g = lb.graph
        assert g.has_arc(x, z) and g.has_arc(t, z) and g.has_arc(t, y)
        assert not g.adjacent(x, y)


def test_complete_classes_need_complete_endpoints():
    lb = build("dl:kb:2,3@r3")
    b = lb.ball
    p = arc_classes(b.graph)
    for i in complete_classes(b, p):
        for u, v in p.classes[i]:
            assert u in b.out_complete and v in b.in_complete
