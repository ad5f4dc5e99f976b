from __future__ import annotations

import pytest

from conftest import d3
from homodigraph.digraph import BipartiteGraph, Digraph, MixedGraph, ball, induced_subdigraph
from homodigraph.errors import ContractError, InputError, SpecParseError
from homodigraph.families import (build, complete, contract_matching, cp, cycle, directed_k2,
                                  is_edge_transitive, line_ball, line_digraph,
                                  make_cayley_free_product_ball, make_bipartite, make_dl_ball,
                                  make_j_segment, make_m_ball, make_t_ball, make_y_ball,
                                  parse_spec, star_expand, tensor_product, tree_fragment)
from homodigraph.families.operators import tensor_id
from homodigraph.iso import is_isomorphic
from homodigraph.reachability import all_reports, arc_classes
from homodigraph.structure import has_directed_cycle


def _three_edge():
    # x - y, x - y', x' - y : not edge transitive
    return BipartiteGraph([0, 1], [2, 3], [(0, 2), (0, 3), (1, 2)])


def test_bipartite_constructors():
    assert is_isomorphic(cp(3).to_digraph(), cycle(6).to_digraph())
    assert is_isomorphic(complete(2, 2).to_digraph(), cycle(4).to_digraph())
    one = cp(1)
    assert len(one) == 2 and not one.edges
    with pytest.raises(InputError):
        cycle(5)
    with pytest.raises(InputError):
        make_bipartite("wheel", 3)
    assert make_bipartite("cp", 4) == cp(4)


def test_tree_fragment_marks_rim():
    t = tree_fragment(2, 3, 3)
    assert len(t.edges) == len(t) - 1
    rim = [v for v, lab in t.labels.items() if lab.endswith("*")]
    assert rim
    inner = [v for v in t.vertices if v not in rim]
    for v in inner:
        assert t.degree(v) == (2 if v in t.part_x else 3)


def test_edge_transitivity():
    assert is_edge_transitive(complete(2, 3))
    assert is_edge_transitive(cycle(6))
    assert not is_edge_transitive(_three_edge())


def test_dl_rejects_non_edge_transitive_base():
    with pytest.raises(InputError):
        make_dl_ball(_three_edge(), 2)


@pytest.mark.parametrize("base,dout,din", [(complete(2, 2), 2, 2), (complete(2, 3), 3, 2),
                                           (cp(3), 2, 2), (cycle(8), 2, 2)])
def test_dl_interior_degrees(base, dout, din):
    lb = make_dl_ball(base, 3)
    g = lb.graph
    for v in lb.ball.interior:
        assert (g.out_degree(v), g.in_degree(v)) == (dout, din)


def test_dl_delta_is_base():
    lb = make_dl_ball(cp(3), 3)
    reps = [r for r in all_reports(lb.ball) if r.completeness == "complete"]
    assert reps and all(is_isomorphic(r.delta, cp(3).to_digraph()) for r in reps)


@pytest.mark.parametrize("base", [complete(2, 2), cp(3), cycle(6)])
def test_dl_independent_of_bijections(base):
    plain = make_dl_ball(base, 3)
    twisted = make_dl_ball(base, 3, twist=True)
    assert is_isomorphic(plain.graph, twisted.graph, fixed={plain.ball.center: twisted.ball.center})


def test_j_segment():
    lb = make_j_segment(2, 2)
    assert len(lb.graph) == 10 and len(lb.graph.arcs) == 16
    for v in lb.ball.interior:
        assert lb.graph.out_degree(v) == 2 and lb.graph.in_degree(v) == 2
    line = make_j_segment(1, 3).graph
    assert all(line.out_degree(v) <= 1 and line.in_degree(v) <= 1 for v in line.vertices)
    assert len(line.arcs) == len(line) - 1
    assert len(build("j:2@m5").graph) == 22


def test_cayley_balls():
    assert is_isomorphic(make_cayley_free_product_ball(1, 3, 2).graph, d3())
    assert len(make_t_ball(3, 1).graph) == 7
    assert is_isomorphic(make_t_ball(1, 3).graph, d3())
    lb = make_cayley_free_product_ball(3, 3, 3)
    g = lb.graph
    for v in lb.ball.interior:
        cycles = [w for w in g.out(v) if any(v in g.out(x) for x in g.out(w))]
        assert len(cycles) == 3
    t2 = make_t_ball(2, 3)
    for v in t2.ball.interior:
        assert t2.graph.out_degree(v) == 2 and t2.graph.in_degree(v) == 2


def test_cayley_k2_digons_are_single_arcs():
    lb = make_cayley_free_product_ball(3, 2, 2)
    assert has_directed_cycle(lb.graph) is None
    assert lb.labels[lb.ball.center] == "e"


def test_star_expand_k3_degrees():
    lb = make_cayley_free_product_ball(4, 3, 3)
    se = star_expand(lb)
    g = se.graph
    assert len(g.vertices) == 4 * len(lb.graph)
    for c in lb.ball.interior:
        for i in range(4):
            v = 4 * c + i
            assert len(g.out(v)) == 1 and len(g.in_(v)) == 1 and len(g.und(v)) == 3


def test_star_expand_single_vertex_k2():
    lb = make_cayley_free_product_ball(3, 2, 1)
    se = star_expand(lb)
    c = lb.ball.center
    clique = [3 * c + i for i in range(3)]
    g = se.graph
    for v in clique:
        others = set(clique) - {v}
        assert others <= g.und(v)
        assert len(g.und(v) - others) == 1   # pendant two-way pair
    assert len(se.cycle_arcs) == 2 * 3


def test_star_expand_rejects_foreign_ball():
    with pytest.raises(InputError):
        star_expand(make_j_segment(2, 2))


def test_tensor_product():
    t = tensor_product(d3(), directed_k2())
    assert len(t) == 6 and len(t.arcs) == 3
    levels = {v % 2 for u, v in t.arcs}
    assert levels == {1} and {u % 2 for u, _ in t.arcs} == {0}
    se = star_expand(make_cayley_free_product_ball(4, 3, 1))
    tp = tensor_product(se.graph, directed_k2())
    c = 0
    clique = [4 * c + i for i in range(4)]
    ids = [tensor_id(se.graph, directed_k2(), v, lev) for v in clique for lev in (0, 1)]
    sub = induced_subdigraph(tp, ids)
    assert is_isomorphic(sub, cp(4).to_digraph())


def test_contract_matching():
    g, rep = contract_matching(Digraph.from_arcs([(0, 1), (1, 2)]), [(0, 1)])
    assert g.arcs == {(0, 2)} and rep[1] == 0
    with pytest.raises(ContractError):
        contract_matching(d3(), [(0, 1)])
    with pytest.raises(ContractError):
        contract_matching(Digraph.from_arcs([(0, 1), (1, 2)]), [(0, 1), (1, 2)])
    with pytest.raises(ContractError):
        contract_matching(d3(), [(1, 0)])


@pytest.mark.parametrize("n,k", [(3, 2), (4, 3), (3, 3)])
def test_m_ball_degrees_and_delta(n, k):
    lb = make_m_ball(n, k, 3)
    g = lb.graph
    for v in lb.ball.interior:
        assert g.out_degree(v) == n - 1 and g.in_degree(v) == n - 1
    reps = [r for r in all_reports(lb.ball) if r.completeness == "complete"]
    assert reps and {r.family for r in reps} == {f"cp({n})"}


def test_m32_matches_y3():
    m = make_m_ball(3, 2, 4, base="vertex")
    y = make_y_ball(3, 5)
    bm = ball(m.ball, m.ball.center, 3)
    by = ball(y.ball, y.ball.center, 3)
    assert is_isomorphic(bm.graph, by.graph)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_y_ball(n):
    lb = make_y_ball(n, 2)
    g = lb.graph
    for v in lb.ball.interior:
        assert g.out_degree(v) == 2 and g.in_degree(v) == 2
    reps = [r for r in all_reports(lb.ball) if r.completeness == "complete"]
    # C_6 is reported under its CP_3 tag
    expected = "cp(3)" if n == 3 else f"cycle({2 * n})"
    assert reps and {r.family for r in reps} == {expected}
    verts = [set(v for a in r.arcs for v in a) for r in reps]
    for i, a in enumerate(verts):
        for b in verts[i + 1:]:
            assert len(a & b) in (0, 2)
    assert any(len(a & b) == 2 for a in verts for b in verts if a is not b)


@pytest.mark.parametrize("swap,mirror", [(True, False), (False, True), (True, True)])
def test_y_conventions_agree(swap, mirror):
    a = make_y_ball(4, 2)
    b = make_y_ball(4, 2, swap=swap, mirror=mirror)
    assert is_isomorphic(a.graph, b.graph)


def test_line_digraph():
    ld, _ = line_digraph(d3())
    assert is_isomorphic(ld, d3())
    ld, arcs = line_digraph(Digraph.from_arcs([(0, 1), (1, 2)]))
    assert len(ld) == 2 and len(ld.arcs) == 1
    lj, _ = line_ball(make_j_segment(2, 4).ball)
    for v in lj.interior:
        assert lj.graph.out_degree(v) == 2 and lj.graph.in_degree(v) == 2
    reps = [r for r in all_reports(lj) if r.completeness == "complete"]
    # each class of L(J(2)) is a K_{2,2}, so both sides of a class have 2 vertices
    assert reps and {r.family for r in reps} == {"complete-bipartite(2,2)"}


@pytest.mark.parametrize("text", ["dl:cp:3@r4", "m:3,2@r5", "j:2@m6", "t:3@r3", "y:5@d2",
                                  "line(dl:cycle:8@r4)", "m:3,2@v4", "cayley:3,3@r2", "cp:3",
                                  "dl:tree:2,3@r3", "dcycle:5"])
def test_spec_round_trip(text):
    assert str(parse_spec(text)) == text


@pytest.mark.parametrize("text", ["dl:xx@r3", "m:2,2@r3", "y:2@d2", "j:0@m2", "line(", "", "t:3@q3"])
def test_bad_specs(text):
    with pytest.raises(SpecParseError):
        parse_spec(text)


@pytest.mark.parametrize("spec", ["dl:cp:3@r3", "j:2@m3", "t:3@r2", "m:3,2@r3", "y:4@d2",
                                  "line(j:2@m3)", "dl:tree:2,2@r3", "dcycle:4", "cayley:2,3@r3"])
def test_every_family_ball_is_consistent(spec):
    lb = build(spec)
    b = lb.ball
    assert len(set(lb.labels.values())) == len(lb.labels) == len(b.graph)
    assert b.center in b.interior
    assert b.depth[b.center] == 0
    assert all(d <= b.radius for d in b.depth.values())
    assert b.interior <= b.out_complete and b.interior <= b.in_complete
