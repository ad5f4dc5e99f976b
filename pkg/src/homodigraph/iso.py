"""Isomorphism and induced-embedding search.

Plain backtracking over a static vertex order.  Pruning comes from two
sources: a joint colour refinement of both graphs (with any pre-fixed pairs
individualised) and anchoring every new vertex at the image of an
already-mapped neighbour.  Works for Digraph and MixedGraph alike; an
adjacency is encoded as 1 (u->v), 2 (v->u) or 3 (undirected).
"""
from __future__ import annotations

from typing import Hashable, Iterable, Mapping

from .digraph import Digraph, IsoMap, MixedGraph, induced_subdigraph
from .errors import InputError

Graph = Digraph | MixedGraph


def adjacency_codes(g: Graph) -> dict[int, dict[int, int]]:
    adj: dict[int, dict[int, int]] = {v: {} for v in g.vertices}
    for u, v in g.arcs:
        adj[u][v] = 1
        adj[v][u] = 2
    for u, v in getattr(g, "edges", ()):
        adj[u][v] = 3
        adj[v][u] = 3
    return adj


_FLIP = {1: 2, 2: 1, 3: 3}


def _degree_signature(nbrs: Mapping[int, int]) -> tuple[int, int, int]:
    counts = [0, 0, 0]
    for c in nbrs.values():
        counts[c - 1] += 1
    return counts[0], counts[1], counts[2]


def _compress(values: list) -> list[int]:
    table = {val: i for i, val in enumerate(sorted(set(values)))}
    return [table[val] for val in values]


def refine_colors(adj: list[list[tuple[int, int]]], init: list) -> list[int]:
    """1-dimensional Weisfeiler-Leman refinement of ``init`` over ``adj``.

    ``adj[i]`` lists ``(j, code)`` pairs.  Returns stable colour ids.
    """
    colors = _compress(init)
    n_classes = len(set(colors))
    while True:
        sigs = [(colors[i], tuple(sorted((c, colors[j]) for j, c in adj[i])))
                for i in range(len(adj))]
        new = _compress(sigs)
        k = len(set(new))
        if k == n_classes:
            return new
        colors, n_classes = new, k


def _color_ids(colors1: Mapping[int, Hashable] | None, colors2: Mapping[int, Hashable] | None,
               v1: Iterable[int], v2: Iterable[int]) -> tuple[dict[int, int], dict[int, int]]:
    if colors1 is None and colors2 is None:
        return {v: 0 for v in v1}, {v: 0 for v in v2}
    if colors1 is None or colors2 is None:
        raise InputError("vertex colours must be given for both graphs or neither")
    vals = sorted(set(colors1.values()) | set(colors2.values()), key=repr)
    table = {c: i for i, c in enumerate(vals)}
    return ({v: table[colors1[v]] for v in v1}, {v: table[colors2[v]] for v in v2})


class _Search:
    def __init__(self, g1: Graph, g2: Graph, fixed: Mapping[int, int], onto: bool,
                 colors1, colors2):
        self.a1 = adjacency_codes(g1)
        self.a2 = adjacency_codes(g2)
        self.v1 = list(g1.vertices)
        self.v2 = list(g2.vertices)
        self.fixed = dict(fixed)
        self.onto = onto
        self.c1, self.c2 = _color_ids(colors1, colors2, self.v1, self.v2)
        self.feasible = self._prepare()

    def _fixed_consistent(self) -> bool:
        used = set()
        for u, x in self.fixed.items():
            if u not in self.a1 or x not in self.a2 or x in used:
                return False
            used.add(x)
            if self.c1[u] != self.c2[x]:
                return False
        for u, x in self.fixed.items():
            for w, c in self.a1[u].items():
                if w in self.fixed and self.a2[x].get(self.fixed[w]) != c:
                    return False
            n_fixed = sum(1 for w in self.a1[u] if w in self.fixed)
            n_img = sum(1 for y in self.a2[x] if y in used)
            if n_fixed != n_img:
                return False
        return True

    def _prepare(self) -> bool:
        if not self._fixed_consistent():
            return False
        if self.onto:
            if len(self.v1) != len(self.v2):
                return False
            if sum(len(n) for n in self.a1.values()) != sum(len(n) for n in self.a2.values()):
                return False
        n1 = len(self.v1)
        if self.onto:
            # joint refinement on the disjoint union, fixed pairs individualised
            index = {("a", v): i for i, v in enumerate(self.v1)}
            index.update({("b", v): n1 + i for i, v in enumerate(self.v2)})
            tag = {u: i + 1 for i, u in enumerate(sorted(self.fixed))}
            tag2 = {self.fixed[u]: t for u, t in tag.items()}
            init = [(self.c1[v], tag.get(v, 0), _degree_signature(self.a1[v])) for v in self.v1]
            init += [(self.c2[v], tag2.get(v, 0), _degree_signature(self.a2[v])) for v in self.v2]
            adj = [[(index[("a", w)], c) for w, c in self.a1[v].items()] for v in self.v1]
            adj += [[(index[("b", w)], c) for w, c in self.a2[v].items()] for v in self.v2]
            ref = refine_colors(adj, init)
            self.r1 = {v: ref[i] for i, v in enumerate(self.v1)}
            self.r2 = {v: ref[n1 + i] for i, v in enumerate(self.v2)}
            hist1: dict[int, int] = {}
            hist2: dict[int, int] = {}
            for c in self.r1.values():
                hist1[c] = hist1.get(c, 0) + 1
            for c in self.r2.values():
                hist2[c] = hist2.get(c, 0) + 1
            if hist1 != hist2:
                return False
            if any(self.r1[u] != self.r2[x] for u, x in self.fixed.items()):
                return False
        else:
            if len(self.v1) > len(self.v2):
                return False
            self.r1 = dict(self.c1)
            self.r2 = dict(self.c2)
            self.deg1 = {v: _degree_signature(self.a1[v]) for v in self.v1}
            self.deg2 = {v: _degree_signature(self.a2[v]) for v in self.v2}
        self.cells: dict[int, list[int]] = {}
        for v in self.v2:
            self.cells.setdefault(self.r2[v], []).append(v)
        self._build_order()
        return True

    def _build_order(self) -> None:
        placed = set(self.fixed)
        cell_size = {c: len(vs) for c, vs in self.cells.items()}
        rest = [v for v in self.v1 if v not in placed]
        links = {v: 0 for v in rest}
        for u in placed:
            for w in self.a1[u]:
                if w in links:
                    links[w] += 1
        order = []
        while links:
            v = min(links, key=lambda x: (-links[x], cell_size.get(self.r1[x], 0), x))
            del links[v]
            order.append(v)
            placed.add(v)
            for w in self.a1[v]:
                if w in links:
                    links[w] += 1
        self.order = order
        pos = {v: i for i, v in enumerate(order)}
        self.prev: list[list[tuple[int, int]]] = []
        self.anchor: list[tuple[int, int] | None] = []
        for i, v in enumerate(order):
            earlier = [(w, c) for w, c in sorted(self.a1[v].items())
                       if w in self.fixed or pos.get(w, len(order)) < i]
            self.prev.append(earlier)
            if earlier:
                # anchor at the earlier neighbour with fewest neighbours
                w, c = min(earlier, key=lambda wc: (len(self.a1[wc[0]]), wc[0]))
                self.anchor.append((w, c))
            else:
                self.anchor.append(None)

    def _candidates(self, i: int, img: dict[int, int], used: set[int]) -> list[int]:
        v = self.order[i]
        col = self.r1[v]
        anc = self.anchor[i]
        if anc is None:
            pool = self.cells.get(col, [])
        else:
            w, c = anc
            back = _FLIP[c]
            pool = sorted(x for x, cx in self.a2[img[w]].items() if cx == back)
        out = []
        need = len(self.prev[i])
        for x in pool:
            if x in used or self.r2[x] != col:
                continue
            if not self.onto:
                d1, d2 = self.deg1[v], self.deg2[x]
                if d1[0] > d2[0] or d1[1] > d2[1] or d1[2] > d2[2]:
                    continue
            ax = self.a2[x]
            if any(ax.get(img[w]) != c for w, c in self.prev[i]):
                continue
            if sum(1 for y in ax if y in used) != need:
                continue
            out.append(x)
        return out

    def run(self, limit: int | None) -> list[IsoMap]:
        if not self.feasible:
            return []
        img = dict(self.fixed)
        used = set(img.values())
        results: list[IsoMap] = []
        m = len(self.order)
        if m == 0:
            return [img]
        iters = [iter(())] * m
        iters[0] = iter(self._candidates(0, img, used))
        i = 0
        while i >= 0:
            x = next(iters[i], None)
            if x is None:
                i -= 1
                if i >= 0:
                    used.discard(img.pop(self.order[i]))
                continue
            img[self.order[i]] = x
            used.add(x)
            if i == m - 1:
                results.append(dict(img))
                if limit is not None and len(results) >= limit:
                    return results
                used.discard(img.pop(self.order[i]))
                continue
            i += 1
            iters[i] = iter(self._candidates(i, img, used))
        return results


def find_isomorphisms(g1: Graph, g2: Graph, limit: int | None = 1, *,
                      fixed: Mapping[int, int] | None = None,
                      colors1: Mapping[int, Hashable] | None = None,
                      colors2: Mapping[int, Hashable] | None = None) -> list[IsoMap]:
    """Up to ``limit`` isomorphisms ``g1 -> g2`` (all of them if ``limit`` is None).

    ``fixed`` pins part of the map; ``colors1``/``colors2`` restrict vertices to
    same-coloured images.  An empty answer is exact.
    """
    if limit is not None and limit < 1:
        return []
    return _Search(g1, g2, fixed or {}, True, colors1, colors2).run(limit)


def is_isomorphic(g1: Graph, g2: Graph, **kw) -> bool:
    return bool(find_isomorphisms(g1, g2, 1, **kw))


def automorphisms(g: Graph, limit: int | None = None,
                  colors: Mapping[int, Hashable] | None = None) -> list[IsoMap]:
    return find_isomorphisms(g, g, limit, colors1=colors, colors2=colors)


def induced_embeddings(g1: Graph, g2: Graph, limit: int | None = 1, *,
                       fixed: Mapping[int, int] | None = None,
                       colors1: Mapping[int, Hashable] | None = None,
                       colors2: Mapping[int, Hashable] | None = None) -> list[IsoMap]:
    """Injective maps ``g1 -> g2`` preserving adjacency and non-adjacency."""
    if limit is not None and limit < 1:
        return []
    return _Search(g1, g2, fixed or {}, False, colors1, colors2).run(limit)


def is_isomap(g1: Graph, g2: Graph, phi: Mapping[int, int]) -> bool:
    """True when ``phi`` is injective and arc-preserving and arc-reflecting on its domain."""
    if len(set(phi.values())) != len(phi):
        return False
    a1 = adjacency_codes(g1)
    a2 = adjacency_codes(g2)
    if any(u not in a1 or x not in a2 for u, x in phi.items()):
        return False
    dom = list(phi)
    for i, u in enumerate(dom):
        for w in dom[i + 1:]:
            if a1[u].get(w) != a2[phi[u]].get(phi[w]):
                return False
    return True


def extend_isomorphism(d: Graph, phi: Mapping[int, int], domain_target: Iterable[int],
                       codomain: Iterable[int] | None = None,
                       colors: Mapping[int, Hashable] | None = None) -> IsoMap | None:
    """Extend ``phi`` to an isomorphic copy of ``<domain_target>`` inside ``d``.

    Without ``codomain`` the image may be any vertex set of ``d`` (an induced
    embedding).  With ``codomain`` the extension must map ``domain_target``
    onto exactly that set, so both sets must induce isomorphic subgraphs.
    The search is exhaustive; ``None`` is an exact negative answer.
    """
    target = set(domain_target)
    verts = set(d.vertices)
    if not target <= verts:
        raise InputError("domain target contains unknown vertices")
    if not set(phi) <= target:
        raise InputError("phi is defined outside the domain target")
    if not set(phi.values()) <= verts:
        raise InputError("phi maps outside the digraph")
    if not is_isomap(d, d, phi):
        raise InputError("phi is not arc-preserving and arc-reflecting")
    g1 = _induced(d, target)
    if codomain is None:
        found = induced_embeddings(g1, d, 1, fixed=phi, colors1=colors and {v: colors[v] for v in target},
                                   colors2=colors)
    else:
        cod = set(codomain)
        if not cod <= verts:
            raise InputError("codomain contains unknown vertices")
        if not set(phi.values()) <= cod:
            return None
        g2 = _induced(d, cod)
        found = find_isomorphisms(g1, g2, 1, fixed=phi,
                                  colors1=colors and {v: colors[v] for v in target},
                                  colors2=colors and {v: colors[v] for v in cod})
    return found[0] if found else None


def _induced(g: Graph, s: set[int]) -> Graph:
    if isinstance(g, Digraph):
        return induced_subdigraph(g, s)
    return MixedGraph(s, ((u, v) for u, v in g.arcs if u in s and v in s),
                      ((u, v) for u, v in g.edges if u in s and v in s))
