"""Core digraph types, traversal and boundary-aware balls.

Vertices are non-negative integers.  Every structure here is immutable once
built; iteration order is always by sorted vertex id so that anything derived
from these objects (witnesses, serialisations) is reproducible.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import InputError

Arc = tuple[int, int]
IsoMap = dict[int, int]


class Digraph:
    """Irreflexive, antisymmetric arc relation on a finite set of integer ids."""

    __slots__ = ("_vertices", "_arcs", "_out", "_in")

    def __init__(self, vertices: Iterable[int], arcs: Iterable[Arc]):
        verts = tuple(sorted(set(vertices)))
        arc_set = frozenset((int(u), int(v)) for u, v in arcs)
        vset = set(verts)
        out: dict[int, set[int]] = {v: set() for v in verts}
        inn: dict[int, set[int]] = {v: set() for v in verts}
        for u, v in arc_set:
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if u not in vset or v not in vset:
                raise InputError(f"arc ({u}, {v}) has an endpoint outside the vertex set")
            if (v, u) in arc_set:
                raise InputError(f"symmetric pair between {u} and {v}")
            out[u].add(v)
            inn[v].add(u)
        self._vertices = verts
        self._arcs = arc_set
        self._out = {v: frozenset(s) for v, s in out.items()}
        self._in = {v: frozenset(s) for v, s in inn.items()}

    @classmethod
    def from_arcs(cls, arcs: Iterable[Arc], vertices: Iterable[int] = ()) -> "Digraph":
        arcs = list(arcs)
        verts = set(vertices)
        for u, v in arcs:
            verts.add(u)
            verts.add(v)
        return cls(verts, arcs)

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def arcs(self) -> frozenset[Arc]:
        return self._arcs

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self._arcs)

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._vertices == other._vertices and self._arcs == other._arcs

    def __hash__(self) -> int:
        return hash((self._vertices, self._arcs))

    def __repr__(self) -> str:
        return f"Digraph(|V|={len(self._vertices)}, |E|={len(self._arcs)})"

    def out(self, v: int) -> frozenset[int]:
        return self._out[v]

    def in_(self, v: int) -> frozenset[int]:
        return self._in[v]

    def nbrs(self, v: int) -> frozenset[int]:
        return self._out[v] | self._in[v]

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arcs

    def adjacent(self, u: int, v: int) -> bool:
        return (u, v) in self._arcs or (v, u) in self._arcs

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def reverse(self) -> "Digraph":
        return Digraph(self._vertices, ((v, u) for u, v in self._arcs))

    def relabel(self, mapping: Mapping[int, int]) -> "Digraph":
        return Digraph((mapping[v] for v in self._vertices),
                       ((mapping[u], mapping[v]) for u, v in self._arcs))


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class MixedGraph:
    """Directed arcs plus undirected edges on integer vertices.

    Used for the underlying graph of a digraph, for star expansions whose
    clique edges run both ways, and for intersection digraphs with symmetric
    pairs.
    """

    __slots__ = ("_vertices", "_arcs", "_edges", "_out", "_in", "_und")

    def __init__(self, vertices: Iterable[int], arcs: Iterable[Arc] = (),
                 edges: Iterable[tuple[int, int]] = ()):
        verts = tuple(sorted(set(vertices)))
        vset = set(verts)
        arc_set = frozenset((int(u), int(v)) for u, v in arcs)
        edge_set = frozenset(_pair(int(u), int(v)) for u, v in edges)
        for u, v in list(arc_set) + list(edge_set):
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if u not in vset or v not in vset:
                raise InputError(f"pair ({u}, {v}) has an endpoint outside the vertex set")
        for u, v in arc_set:
            if (v, u) in arc_set:
                raise InputError(f"symmetric directed pair between {u} and {v}")
            if _pair(u, v) in edge_set:
                raise InputError(f"pair ({u}, {v}) is both an arc and an edge")
        self._vertices = verts
        self._arcs = arc_set
        self._edges = edge_set
        out: dict[int, set[int]] = {v: set() for v in verts}
        inn: dict[int, set[int]] = {v: set() for v in verts}
        und: dict[int, set[int]] = {v: set() for v in verts}
        for u, v in arc_set:
            out[u].add(v)
            inn[v].add(u)
        for u, v in edge_set:
            und[u].add(v)
            und[v].add(u)
        self._out = {v: frozenset(s) for v, s in out.items()}
        self._in = {v: frozenset(s) for v, s in inn.items()}
        self._und = {v: frozenset(s) for v, s in und.items()}

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def arcs(self) -> frozenset[Arc]:
        return self._arcs

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self._edges

    def out(self, v: int) -> frozenset[int]:
        return self._out[v]

    def in_(self, v: int) -> frozenset[int]:
        return self._in[v]

    def und(self, v: int) -> frozenset[int]:
        return self._und[v]

    def nbrs(self, v: int) -> frozenset[int]:
        return self._out[v] | self._in[v] | self._und[v]

    def __len__(self) -> int:
        return len(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return (self._vertices, self._arcs, self._edges) == (
            other._vertices, other._arcs, other._edges)

    def __hash__(self) -> int:
        return hash((self._vertices, self._arcs, self._edges))

    def __repr__(self) -> str:
        return (f"MixedGraph(|V|={len(self._vertices)}, arcs={len(self._arcs)}, "
                f"edges={len(self._edges)})")

    def symmetric_pairs(self) -> set[Arc]:
        """Every adjacency as ordered pairs; undirected edges contribute both ways."""
        pairs = set(self._arcs)
        for u, v in self._edges:
            pairs.add((u, v))
            pairs.add((v, u))
        return pairs


class BipartiteGraph:
    """Graph with an ordered bipartition; edges are stored as (x, y) with x in X."""

    __slots__ = ("_x", "_y", "_edges", "_adj", "labels")

    def __init__(self, part_x: Iterable[int], part_y: Iterable[int],
                 edges: Iterable[tuple[int, int]],
                 labels: Mapping[int, str] | None = None):
        px = tuple(part_x)
        py = tuple(part_y)
        if len(set(px)) != len(px) or len(set(py)) != len(py):
            raise InputError("repeated vertex inside a part")
        if set(px) & set(py):
            raise InputError("parts X and Y overlap")
        xs, ys = set(px), set(py)
        es = set()
        for a, b in edges:
            if a in xs and b in ys:
                es.add((a, b))
            elif a in ys and b in xs:
                es.add((b, a))
            else:
                raise InputError(f"edge ({a}, {b}) does not cross the bipartition")
        self._x = px
        self._y = py
        self._edges = frozenset(es)
        adj: dict[int, set[int]] = {v: set() for v in px + py}
        for a, b in es:
            adj[a].add(b)
            adj[b].add(a)
        self._adj = {v: frozenset(s) for v, s in adj.items()}
        self.labels = dict(labels) if labels else {}

    @property
    def part_x(self) -> tuple[int, ...]:
        return self._x

    @property
    def part_y(self) -> tuple[int, ...]:
        return self._y

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self._edges

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._x + self._y

    def nbrs(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def __len__(self) -> int:
        return len(self._x) + len(self._y)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (self._x, self._y, self._edges) == (other._x, other._y, other._edges)

    def __hash__(self) -> int:
        return hash((self._x, self._y, self._edges))

    def __repr__(self) -> str:
        return f"BipartiteGraph(|X|={len(self._x)}, |Y|={len(self._y)}, |E|={len(self._edges)})"

    def to_digraph(self) -> Digraph:
        """Orient every edge from X to Y."""
        return Digraph(self.vertices, self._edges)

    def part_colors(self) -> dict[int, int]:
        colors = {v: 0 for v in self._x}
        colors.update({v: 1 for v in self._y})
        return colors

    def is_connected(self) -> bool:
        verts = self.vertices
        if not verts:
            return True
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            v = stack.pop()
            for w in self._adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(verts)

    def swapped(self) -> "BipartiteGraph":
        return BipartiteGraph(self._y, self._x, ((b, a) for a, b in self._edges), self.labels)

    @classmethod
    def from_digraph(cls, d: Digraph) -> "BipartiteGraph":
        """Tails become X, heads become Y; raises if some vertex is both."""
        tails = {u for u, _ in d.arcs}
        heads = {v for _, v in d.arcs}
        if tails & heads:
            raise InputError("digraph is not oriented from one part to the other")
        isolated = set(d.vertices) - tails - heads
        return cls(sorted(tails | isolated), sorted(heads), d.arcs)


@dataclass(frozen=True, eq=False)
class FiniteBall:
    """A finite truncation of a (usually infinite) digraph.

    ``interior`` vertices have every parent-graph neighbour present.
    ``out_complete``/``in_complete`` are the finer one-sided versions; a
    vertex on the rim can still have all of its out-neighbours inside.
    ``depth`` is the underlying distance from the base object.
    """

    graph: Digraph
    center: int
    radius: int
    interior: frozenset[int]
    depth: Mapping[int, int]
    out_complete: frozenset[int] | None = None
    in_complete: frozenset[int] | None = None

    def __post_init__(self) -> None:
        verts = set(self.graph.vertices)
        if self.center not in verts:
            raise InputError("center is not a vertex of the ball")
        if not self.interior <= verts:
            raise InputError("interior contains unknown vertices")
        if self.out_complete is None:
            object.__setattr__(self, "out_complete", frozenset(self.interior))
        if self.in_complete is None:
            object.__setattr__(self, "in_complete", frozenset(self.interior))
        if not self.interior <= (self.out_complete & self.in_complete):
            raise InputError("interior vertices must be complete on both sides")
        if set(self.depth) != verts:
            raise InputError("depth must be defined on every vertex")
        if self.depth[self.center] != 0 and self.radius >= 0:
            pass
        if any(d > self.radius for d in self.depth.values()):
            raise InputError("depth exceeds radius")

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.graph.vertices

    def is_interior(self, v: int) -> bool:
        return v in self.interior

    def deep_interior(self, t: int) -> frozenset[int]:
        """Vertices whose whole (t-1)-neighbourhood is interior."""
        if t <= 0:
            return frozenset(self.graph.vertices)
        bad = set(self.graph.vertices) - set(self.interior)
        frontier = set(bad)
        for _ in range(t - 1):
            nxt = set()
            for v in frontier:
                nxt |= self.graph.nbrs(v)
            nxt -= bad
            bad |= nxt
            frontier = nxt
        return frozenset(v for v in self.graph.vertices if v not in bad)


# ---------------------------------------------------------------- operations

def _require_vertices(d: Digraph, vs: Iterable[int]) -> None:
    for v in vs:
        if v not in d:
            raise InputError(f"unknown vertex {v}")


def induced_subdigraph(d: Digraph, s: Iterable[int]) -> Digraph:
    s = set(s)
    _require_vertices(d, s)
    return Digraph(s, ((u, v) for u, v in d.arcs if u in s and v in s))


def underlying_graph(d: Digraph) -> MixedGraph:
    return MixedGraph(d.vertices, (), d.arcs)


def neighbors(d: Digraph, v: int) -> tuple[frozenset[int], frozenset[int]]:
    """Return ``(out, in)`` neighbour sets of ``v``."""
    _require_vertices(d, [v])
    return d.out(v), d.in_(v)


def weak_components(d: Digraph | MixedGraph) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for s in d.vertices:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for w in d.nbrs(v):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def bfs_depths(d: Digraph | MixedGraph, sources: Iterable[int],
               limit: int | None = None) -> dict[int, int]:
    """Underlying-graph distances from a set of sources, optionally capped."""
    depth = {}
    queue: deque[int] = deque()
    for s in sorted(set(sources)):
        depth[s] = 0
        queue.append(s)
    while queue:
        v = queue.popleft()
        dv = depth[v]
        if limit is not None and dv >= limit:
            continue
        for w in sorted(d.nbrs(v)):
            if w not in depth:
                depth[w] = dv + 1
                queue.append(w)
    return depth


def distance(d: Digraph, u: int, v: int) -> int | None:
    _require_vertices(d, [u, v])
    return bfs_depths(d, [u]).get(v)


def neighbourhood(d: Digraph, s: Iterable[int], t: int) -> frozenset[int]:
    """Vertices within underlying distance ``t`` of the set ``s``."""
    return frozenset(bfs_depths(d, s, limit=t))


def ball(d: Digraph | FiniteBall, v: int, r: int) -> FiniteBall:
    """Induced ball of underlying radius ``r`` around ``v``.

    When ``d`` is itself a FiniteBall, completeness is intersected with the
    parent's so that rim vertices of the parent never count as interior.
    """
    parent = d if isinstance(d, FiniteBall) else None
    g = parent.graph if parent else d
    _require_vertices(g, [v])
    if r < 0:
        raise InputError("radius must be non-negative")
    depth = bfs_depths(g, [v], limit=r)
    sub = induced_subdigraph(g, depth)
    interior = {w for w, dw in depth.items() if dw <= r - 1}
    out_c = {w for w in depth if g.out(w) <= depth.keys()}
    in_c = {w for w in depth if g.in_(w) <= depth.keys()}
    if parent:
        interior &= parent.interior
        out_c &= parent.out_complete
        in_c &= parent.in_complete
    out_c |= interior
    in_c |= interior
    return FiniteBall(sub, v, r, frozenset(interior), depth,
                      frozenset(out_c), frozenset(in_c))


def enumerate_connected_subdigraphs(d: Digraph | MixedGraph, max_size: int,
                                    allowed_roots: Iterable[int] | None = None,
                                    exact_size: int | None = None) -> Iterator[frozenset[int]]:
    """Yield every connected vertex set of size <= ``max_size`` exactly once.

    ESU-style enumeration: each set is produced from its smallest vertex,
    growing only through vertices larger than that root.  With
    ``allowed_roots`` only sets meeting that collection are yielded.
    """
    if max_size < 1:
        raise InputError("max_size must be at least 1")
    allowed = None if allowed_roots is None else frozenset(allowed_roots)
    nbr = {v: d.nbrs(v) for v in d.vertices}

    def extend(sub: frozenset[int], ext: list[int], sub_nbhd: frozenset[int],
               root: int) -> Iterator[frozenset[int]]:
        if exact_size is None or len(sub) == exact_size:
            if allowed is None or not allowed.isdisjoint(sub):
                yield sub
        if len(sub) >= (exact_size or max_size):
            return
        ext = list(ext)
        while ext:
            w = ext.pop(0)
            new_ext = list(ext)
            for u in sorted(nbr[w]):
                if u > root and u not in sub_nbhd and u not in new_ext:
                    new_ext.append(u)
            new_ext.sort()
            yield from extend(sub | {w}, new_ext, sub_nbhd | nbr[w] | {w}, root)

    for v in d.vertices:
        start_ext = sorted(u for u in nbr[v] if u > v)
        yield from extend(frozenset([v]), start_ext, nbr[v] | {v}, v)


def has_odd_cycle(g: Digraph | MixedGraph) -> bool:
    color: dict[int, int] = {}
    for s in g.vertices:
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.nbrs(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return True
    return False


def find_undirected_cycle(g: Digraph | MixedGraph, within: Iterable[int] | None = None) -> list[int] | None:
    """Vertex sequence of some cycle in the underlying graph, or None if a forest."""
    allowed = set(g.vertices) if within is None else set(within)
    parent: dict[int, int | None] = {}
    for s in sorted(allowed):
        if s in parent:
            continue
        parent[s] = None
        depth = {s: 0}
        stack = [s]
        while stack:
            v = stack.pop()
            for w in sorted(g.nbrs(v)):
                if w not in allowed or w == parent[v]:
                    continue
                if w in parent:
                    # close the cycle through the lowest common ancestor
                    a, b = v, w
                    left, right = [a], [b]
                    while a != b:
                        if depth[a] >= depth[b]:
                            a = parent[a]
                            left.append(a)
                        else:
                            b = parent[b]
                            right.append(b)
                    right.pop()
                    return left + right[::-1]
                parent[w] = v
                depth[w] = depth[v] + 1
                stack.append(w)
    return None
