"""Reachability relation on arcs, its classes, the intersection digraph of
the classes and the matched-pair relation x => y.

Two arcs sharing a tail or a head are one alternating step apart, and those
steps generate the relation, so the classes are the components of a
union-find over arcs keyed by their endpoints.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .digraph import (Arc, BipartiteGraph, Digraph, FiniteBall, MixedGraph, has_odd_cycle,
                      induced_subdigraph, weak_components)
from .errors import InputError
from .iso import is_isomorphic


class _DisjointSet:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


@dataclass(frozen=True)
class ArcClassPartition:
    classes: tuple[frozenset[Arc], ...]
    class_of: dict[Arc, int] = field(repr=False)

    def vertices_of(self, index: int) -> frozenset[int]:
        return frozenset(v for arc in self.classes[index] for v in arc)

    def __len__(self) -> int:
        return len(self.classes)


def arc_classes(d: Digraph) -> ArcClassPartition:
    """Partition of the arcs into reachability classes, ordered by smallest arc."""
    arcs = d.sorted_arcs()
    ds = _DisjointSet(arcs)
    for v in d.vertices:
        outs = sorted(d.out(v))
        for w in outs[1:]:
            ds.union((v, outs[0]), (v, w))
        ins = sorted(d.in_(v))
        for u in ins[1:]:
            ds.union((ins[0], v), (u, v))
    groups: dict[Arc, list[Arc]] = {}
    for a in arcs:
        groups.setdefault(ds.find(a), []).append(a)
    classes = sorted((frozenset(g) for g in groups.values()), key=min)
    class_of = {a: i for i, c in enumerate(classes) for a in c}
    return ArcClassPartition(tuple(classes), class_of)


def alternating_closure(d: Digraph, e: Arc) -> frozenset[Arc]:
    """Arcs reachable from ``e`` by alternating walks, by direct walk search.

    Independent of :func:`arc_classes`; used to cross-check it.
    """
    seen = {e}
    # state: (arc, whether the next step must share the head)
    stack = [(e, True), (e, False)]
    visited = set(stack)
    while stack:
        (u, v), via_head = stack.pop()
        nxt = [(w, v) for w in d.in_(v)] if via_head else [(u, w) for w in d.out(u)]
        for a in nxt:
            state = (a, not via_head)
            if state not in visited:
                visited.add(state)
                seen.add(a)
                stack.append(state)
    return frozenset(seen)


# ---------------------------------------------------------------- shapes

def _is_cp(b: BipartiteGraph) -> int | None:
    n = len(b.part_x)
    if n < 2 or len(b.part_y) != n or len(b.edges) != n * (n - 1):
        return None
    if any(b.degree(v) != n - 1 for v in b.vertices):
        return None
    # degree n-1 in K_{n,n} means exactly one non-neighbour each: a matching complement
    return n


def classify_bipartite_shape(b: BipartiteGraph) -> str:
    """Tag a connected bipartite graph; CP wins ties, then complete, then cycle."""
    if not b.is_connected():
        raise InputError("shape classification needs a connected graph")
    nx_, ny = len(b.part_x), len(b.part_y)
    n_cp = _is_cp(b)
    if n_cp is not None:
        return f"cp({n_cp})"
    if len(b.edges) == nx_ * ny:
        return f"complete-bipartite({nx_},{ny})"
    if len(b) >= 4 and all(b.degree(v) == 2 for v in b.vertices):
        return f"cycle({len(b)})"
    if len(b.edges) == len(b) - 1:
        a = max(b.degree(x) for x in b.part_x)
        c = max(b.degree(y) for y in b.part_y)
        return f"tree-fragment({a},{c})"
    return "other"


def classify_delta(delta: Digraph) -> str:
    if has_odd_cycle(delta):
        return "non-bipartite"
    tails = {u for u, _ in delta.arcs}
    heads = {v for _, v in delta.arcs}
    if tails & heads:
        return "other"
    return classify_bipartite_shape(BipartiteGraph.from_digraph(delta))


@dataclass(frozen=True)
class ReachabilityReport:
    class_index: int
    arcs: frozenset[Arc]
    delta: Digraph
    family: str
    universal_at_scale: bool
    completeness: str

    def to_json(self, labels=None) -> dict:
        def name(v):
            return labels[v] if labels else v
        return {
            "classIndex": self.class_index,
            "family": self.family,
            "universalAtScale": self.universal_at_scale,
            "completeness": self.completeness,
            "vertexCount": len(self.delta),
            "arcCount": len(self.arcs),
            "arcs": [[name(u), name(v)] for u, v in sorted(self.arcs)],
        }


def _completeness_sets(d, interior, out_complete, in_complete):
    if isinstance(d, FiniteBall):
        return d.graph, d.interior, d.out_complete, d.in_complete
    verts = frozenset(d.vertices)
    interior = verts if interior is None else frozenset(interior)
    oc = interior if out_complete is None else frozenset(out_complete) | interior
    ic = interior if in_complete is None else frozenset(in_complete) | interior
    if interior is verts:
        oc = ic = verts
    return d, interior, oc, ic


def class_is_complete(arcs: Iterable[Arc], out_complete, in_complete) -> bool:
    """Every arc sharing a tail or head with the class is present in the ball."""
    return all(u in out_complete and v in in_complete for u, v in arcs)


def reachability_digraph(d: Digraph | FiniteBall, e: Arc, interior: Iterable[int] | None = None,
                         partition: ArcClassPartition | None = None,
                         out_complete: Iterable[int] | None = None,
                         in_complete: Iterable[int] | None = None) -> ReachabilityReport:
    """Delta of the class of ``e`` with a shape tag and completeness flag.

    A class counts as complete when every tail is out-complete and every
    head in-complete, so no arc of the parent graph is missing from it.
    ``universal_at_scale`` means the class holds every arc of the ball that
    touches an interior vertex.
    """
    g, interior, oc, ic = _completeness_sets(d, interior, out_complete, in_complete)
    if not g.has_arc(*e):
        raise InputError(f"{e} is not an arc")
    part = partition or arc_classes(g)
    idx = part.class_of[e]
    arcs = part.classes[idx]
    verts = {v for a in arcs for v in a}
    delta = Digraph(verts, arcs)
    complete = class_is_complete(arcs, oc, ic)
    touching = {a for a in g.arcs if a[0] in interior or a[1] in interior}
    universal = bool(touching) and touching <= arcs
    return ReachabilityReport(idx, arcs, delta, classify_delta(delta), universal,
                              "complete" if complete else "boundary-clipped")


def all_reports(d: Digraph | FiniteBall) -> list[ReachabilityReport]:
    g = d.graph if isinstance(d, FiniteBall) else d
    part = arc_classes(g)
    return [reachability_digraph(d, min(c), partition=part) for c in part.classes]


# ---------------------------------------------------------------- intersection digraph

@dataclass(frozen=True)
class IntersectionDigraph:
    vertices: tuple[int, ...]
    arcs: frozenset[tuple[int, int]]
    undirected: frozenset[tuple[int, int]]
    witnesses: dict[tuple[int, int], tuple[int, int, int]] = field(repr=False)
    loops: frozenset[int] = frozenset()

    def as_mixed(self, keep: Iterable[int] | None = None) -> MixedGraph:
        ks = set(self.vertices) if keep is None else set(keep)
        return MixedGraph(ks, [a for a in self.arcs if a[0] in ks and a[1] in ks],
                          [e for e in self.undirected if e[0] in ks and e[1] in ks])

    def as_digraph(self, keep: Iterable[int] | None = None) -> Digraph:
        if self.undirected:
            raise InputError("intersection digraph has symmetric pairs")
        ks = set(self.vertices) if keep is None else set(keep)
        return Digraph(ks, [a for a in self.arcs if a[0] in ks and a[1] in ks])


def intersection_digraph(d: Digraph, p: ArcClassPartition | None = None) -> IntersectionDigraph:
    """Classes C1 -> C2 whenever some 2-arc x -> y -> z has (x,y) in C1 and (y,z) in C2.

    All in-arcs at y lie in one class and all out-arcs in one class, so each
    vertex contributes at most one pair; the stored witness is the smallest
    2-arc through the smallest such y.
    """
    p = p or arc_classes(d)
    pairs: dict[tuple[int, int], tuple[int, int, int]] = {}
    loops = set()
    for y in d.vertices:
        if not d.in_(y) or not d.out(y):
            continue
        x, z = min(d.in_(y)), min(d.out(y))
        c1, c2 = p.class_of[(x, y)], p.class_of[(y, z)]
        if c1 == c2:
            loops.add(c1)
            continue
        pairs.setdefault((c1, c2), (x, y, z))
    arcs = set()
    und = set()
    for a, b in pairs:
        if (b, a) in pairs:
            und.add((min(a, b), max(a, b)))
        else:
            arcs.add((a, b))
    return IntersectionDigraph(tuple(range(len(p))), frozenset(arcs), frozenset(und),
                               pairs, frozenset(loops))


# ---------------------------------------------------------------- matched pairs

@dataclass(frozen=True)
class MatchRelation:
    pairs: frozenset[tuple[int, int]]
    witnesses: dict[tuple[int, int], tuple[int, int]] = field(repr=False)

    def out_of(self, x: int) -> list[int]:
        return sorted(y for a, y in self.pairs if a == x)

    def in_of(self, y: int) -> list[int]:
        return sorted(x for x, b in self.pairs if b == y)


def match_relation(d: Digraph | FiniteBall, interior: Iterable[int] | None = None) -> MatchRelation:
    """All x => y with x in ``interior``: x -> z <- t -> y, x != y and no arc x -> y."""
    if isinstance(d, FiniteBall):
        g = d.graph
        interior = d.interior if interior is None else interior
    else:
        g = d
        interior = g.vertices if interior is None else interior
    pairs: dict[tuple[int, int], tuple[int, int]] = {}
    for x in sorted(interior):
        for z in sorted(g.out(x)):
            for t in sorted(g.in_(z)):
                if t == x:
                    continue
                for y in sorted(g.out(t)):
                    if y != x and not g.has_arc(x, y):
                        pairs.setdefault((x, y), (z, t))
    return MatchRelation(frozenset(pairs), pairs)


def complete_classes(ball: FiniteBall, p: ArcClassPartition | None = None) -> list[int]:
    p = p or arc_classes(ball.graph)
    return [i for i, c in enumerate(p.classes)
            if class_is_complete(c, ball.out_complete, ball.in_complete)]


def intersection_fragment(ball: FiniteBall) -> MixedGraph:
    """The intersection digraph restricted to the complete classes of a ball."""
    p = arc_classes(ball.graph)
    return intersection_digraph(ball.graph, p).as_mixed(complete_classes(ball, p))


def match_free_product_fragment(fragment: MixedGraph, n: int, k: int) -> tuple[int, dict] | None:
    """Find a Cayley ball of T_{n,k} isomorphic to ``fragment``.

    Tries the radius whose ball has the same number of vertices; for k = 2
    the two-way pairs of T_{n,2} are compared as undirected edges.  Returns
    (radius, isomorphism) or None.
    """
    from .families.cayley import make_cayley_free_product_ball
    from .digraph import underlying_graph
    from .iso import find_isomorphisms
    rho = 0
    while True:
        cb = make_cayley_free_product_ball(n, k, rho).graph
        if len(cb) >= len(fragment.vertices):
            break
        rho += 1
    if len(cb) != len(fragment.vertices):
        return None
    target = underlying_graph(cb) if k == 2 else MixedGraph(cb.vertices, cb.arcs)
    found = find_isomorphisms(fragment, target, 1)
    return (rho, found[0]) if found else None
