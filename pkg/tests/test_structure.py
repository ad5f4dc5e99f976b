from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import d3, digraphs
from homodigraph.digraph import Digraph, induced_subdigraph, weak_components
from homodigraph.errors import InputError
from homodigraph.families import build, make_j_segment
from homodigraph.families.base import finite_ball
from homodigraph.reachability import arc_classes
from homodigraph.structure import (ancestors, descendants, ends_probe, has_directed_cycle,
                                   is_anc_tree, is_desc_tree, level_assignment,
                                   path_length_uniformity, path_lengths_from,
                                   spanning_tree_balanced, triangle_profile, walk_signs)
from homodigraph.symmetry import EXACT_FALSE, EXACT_TRUE, VERIFIED


def _level(lb, v):
    return int(lb.labels[v][1:].split(",")[0])


def test_descendants_examples():
    lb = build("dl:tree:2,1@r3")  # out-degree 2, in-degree 1
    leaves = [v for v in lb.graph.vertices if not lb.graph.out(v)]
    assert leaves and descendants(lb.ball, leaves[0]).vertices == {leaves[0]}
    j = make_j_segment(2, 3)
    u = j.id_of("(0,1)")
    ds = descendants(j.ball, u)
    assert ds.vertices == {u} | {v for v in j.graph.vertices if _level(j, v) > 0}
    assert ds.clipped
    with pytest.raises(InputError):
        descendants(j.ball, 999)


def test_dl_descendants_do_not_reconverge():
    lb = build("dl:cp:3@r3")
    b = lb.ball
    ds = descendants(b, b.center)
    sub = induced_subdigraph(lb.graph, ds.vertices)
    assert len(sub.arcs) == len(sub) - 1


@pytest.mark.parametrize("spec", ["dl:kb:2,3@r4", "dl:cp:3@r4", "m:3,2@r4", "y:4@d2"])
def test_desc_and_anc_trees(spec):
    b = build(spec).ball
    for u in sorted(b.interior)[:10]:
        d, a = is_desc_tree(b, u), is_anc_tree(b, u)
        assert d.verdict == VERIFIED
        assert d.verdict == a.verdict


def test_j2_descendants_reconverge():
    lb = make_j_segment(2, 4)
    rep = is_desc_tree(lb.ball, lb.id_of("(0,1)"))
    assert rep.verdict == EXACT_FALSE
    cyc = rep.witness["cycle"]
    assert len(cyc) == 4
    assert is_anc_tree(lb.ball, lb.id_of("(0,1)")).verdict == EXACT_FALSE


def test_directed_cycles():
    assert sorted(has_directed_cycle(d3())) == [0, 1, 2]
    assert has_directed_cycle(build("dl:cp:3@r4").ball) is None
    t = build("t:3@r3")
    cyc = has_directed_cycle(t.ball)
    assert cyc is not None and len(cyc) == 3


@settings(max_examples=100, deadline=None)
@given(digraphs(max_vertices=8))
def test_directed_cycle_is_real(g):
    cyc = has_directed_cycle(g)
    if cyc is None:
        # a topological order exists
        indeg = {v: len(g.in_(v)) for v in g.vertices}
        ready = [v for v in g.vertices if not indeg[v]]
        seen = 0
        while ready:
            v = ready.pop()
            seen += 1
            for w in g.out(v):
                indeg[w] -= 1
                if not indeg[w]:
                    ready.append(w)
        assert seen == len(g)
    else:
        assert all(g.has_arc(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1]))


def test_path_lengths():
    j = make_j_segment(2, 3)
    u, v = j.id_of("(-1,1)"), j.id_of("(2,2)")
    rep = path_length_uniformity(j.ball, u, v)
    assert rep.verdict == EXACT_TRUE and rep.stats["length"] == 3
    t = build("t:3@r3")
    c = t.ball.center
    w = sorted(t.graph.out(c))[0]
    rep = path_length_uniformity(t.ball, c, w)
    assert rep.verdict == EXACT_FALSE
    assert sorted(rep.witness["lengths"]) == [1, 4]
    m = build("m:3,2@r4")
    assert path_lengths_from(m.ball, m.ball.center).verdict == EXACT_TRUE


@settings(max_examples=80, deadline=None)
@given(digraphs(max_vertices=7))
def test_single_source_agrees_with_pairs(g):
    for u in g.vertices:
        all_pairs = all(path_length_uniformity(g, u, v).verdict == EXACT_TRUE for v in g.vertices)
        assert (path_lengths_from(g, u).verdict == EXACT_TRUE) == all_pairs


@settings(max_examples=80, deadline=None)
@given(digraphs(max_vertices=7))
def test_path_witness_walks_are_real(g):
    for u in g.vertices:
        for v in g.vertices:
            rep = path_length_uniformity(g, u, v)
            if rep.verdict == EXACT_FALSE:
                w1, w2 = rep.witness["walks"]
                for w in (w1, w2):
                    assert w[0] == u and w[-1] == v
                    assert all(g.has_arc(a, b) for a, b in zip(w, w[1:]))
                assert len(w1) != len(w2)


def test_level_assignment_examples():
    j = make_j_segment(3, 3)
    lf = level_assignment(j.ball)
    assert lf.consistent
    base = lf.levels[j.id_of("(0,1)")]
    assert all(lf.levels[v] - base == _level(j, v) for v in j.graph.vertices)
    assert level_assignment(build("line(dl:cycle:6@r4)").ball).consistent
    m = build("m:3,2@r4")
    lf = level_assignment(m.ball)
    assert not lf.consistent and abs(lf.orientation_sum) == 2
    assert walk_signs(m.graph, lf.conflict_cycle) == lf.signs


def test_m32_conflict_cycle_uses_two_blocks():
    m = build("m:3,2@r4")
    lf = level_assignment(m.ball)
    part = arc_classes(m.graph)
    walk = lf.conflict_cycle
    used = {part.class_of[(a, b) if m.graph.has_arc(a, b) else (b, a)] for a, b in zip(walk, walk[1:])}
    assert len(used) == 2


def test_level_assignment_rejects_disconnected():
    with pytest.raises(InputError):
        level_assignment(Digraph.from_arcs([(0, 1), (2, 3)]))


@settings(max_examples=150, deadline=None)
@given(digraphs(max_vertices=8, min_vertices=1))
def test_level_consistency_matches_spanning_tree(g):
    g = induced_subdigraph(g, weak_components(g)[0])
    lf = level_assignment(g)
    assert lf.consistent == spanning_tree_balanced(g)
    if lf.consistent:
        assert all(lf.levels[b] == lf.levels[a] + 1 for a, b in g.arcs)
    else:
        walk = lf.conflict_cycle
        assert walk[0] == walk[-1]
        assert sum(walk_signs(g, walk)) != 0


def test_triangle_profiles():
    t = build("t:3@r3")
    tp = triangle_profile(t.ball, t.ball.center)
    assert len(tp.triangles) == 3 and not tp.residue and tp.disjoint_apart_from_center
    dl = build("dl:cp:3@r3")
    tp = triangle_profile(dl.ball, dl.ball.center)
    assert not tp.triangles
    assert tp.residue == dl.graph.nbrs(dl.ball.center)
    one = build("t:1@r2")
    assert len(triangle_profile(one.ball, one.ball.center).triangles) == 1
    with pytest.raises(InputError):
        triangle_profile(t.ball, max(t.graph.vertices))


def test_ends_probe():
    j = make_j_segment(2, 4)
    assert ends_probe(j.ball, [j.id_of("(0,1)"), j.id_of("(0,2)")]) == 2
    assert ends_probe(j.ball, []) == 1
    dl = build("dl:kb:2,2@r4")
    part = arc_classes(dl.graph)
    block = part.vertices_of(part.class_of[min(a for a in dl.graph.arcs if dl.ball.center in a)])
    assert ends_probe(dl.ball, block) >= 3
    with pytest.raises(InputError):
        ends_probe(j.ball, [999])


def test_finite_ball_wrapper_defaults():
    b = finite_ball(d3(), [0])
    assert b.interior == {0, 1, 2} and b.radius == 1
