"""Descendant sets, directed cycles, walk lengths, level functions (property
Z), triangle profiles and an ends proxy on balls."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .digraph import (Digraph, FiniteBall, find_undirected_cycle, induced_subdigraph,
                      weak_components)
from .errors import InputError
from .symmetry import EXACT_FALSE, EXACT_TRUE, INCONCLUSIVE, VERIFIED, CheckReport


def _graph(b: FiniteBall | Digraph) -> Digraph:
    return b.graph if isinstance(b, FiniteBall) else b


@dataclass(frozen=True)
class ReachSet:
    vertices: frozenset[int]
    clipped: bool

    def __contains__(self, v: object) -> bool:
        return v in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(sorted(self.vertices))


def _directed_reach(g: Digraph, u: int, forward: bool) -> set[int]:
    seen = {u}
    stack = [u]
    step = g.out if forward else g.in_
    while stack:
        v = stack.pop()
        for w in step(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def descendants(ball: FiniteBall, u: int) -> ReachSet:
    """Vertices reachable from ``u`` by directed paths inside the ball.

    ``clipped`` is set when some reached vertex may have out-neighbours
    outside the ball.
    """
    if u not in ball.graph:
        raise InputError(f"unknown vertex {u}")
    seen = _directed_reach(ball.graph, u, True)
    return ReachSet(frozenset(seen), any(v not in ball.out_complete for v in seen))


def ancestors(ball: FiniteBall, u: int) -> ReachSet:
    if u not in ball.graph:
        raise InputError(f"unknown vertex {u}")
    seen = _directed_reach(ball.graph, u, False)
    return ReachSet(frozenset(seen), any(v not in ball.in_complete for v in seen))


def is_desc_tree(ball: FiniteBall, u: int, direction: str = "desc") -> CheckReport:
    """Is the underlying graph of <desc(u)> (or <anc(u)>) a tree?

    Only descendants that are interior vertices are used, so a cycle found
    lies in the parent graph and refutes the claim outright.
    """
    if direction not in ("desc", "anc"):
        raise InputError("direction must be 'desc' or 'anc'")
    rs = descendants(ball, u) if direction == "desc" else ancestors(ball, u)
    part = set(rs.vertices) & set(ball.interior)
    part.add(u)
    params = {"u": u, "direction": direction, "restrictedTo": "interior"}
    cyc = find_undirected_cycle(induced_subdigraph(ball.graph, part))
    if cyc is not None:
        return CheckReport(EXACT_FALSE, {"cycle": cyc}, params, {"vertices": len(part)})
    return CheckReport(VERIFIED, None, params, {"vertices": len(part)})


def is_anc_tree(ball: FiniteBall, u: int) -> CheckReport:
    return is_desc_tree(ball, u, "anc")


def has_directed_cycle(d: Digraph | FiniteBall) -> list[int] | None:
    """Some directed cycle as a vertex list (first vertex not repeated), or None."""
    g = _graph(d)
    color = {v: 0 for v in g.vertices}
    parent: dict[int, int] = {}
    for s in g.vertices:
        if color[s]:
            continue
        color[s] = 1
        stack = [(s, iter(sorted(g.out(s))))]
        while stack:
            v, it = stack[-1]
            w = next(it, None)
            if w is None:
                color[v] = 2
                stack.pop()
                continue
            if color[w] == 0:
                color[w] = 1
                parent[w] = v
                stack.append((w, iter(sorted(g.out(w)))))
            elif color[w] == 1:
                cyc = [v]
                while cyc[-1] != w:
                    cyc.append(parent[cyc[-1]])
                return cyc[::-1]
    return None


def _dir_dist(g: Digraph, src: int, allowed: set[int], forward: bool = True) -> tuple[dict, dict]:
    dist = {src: 0}
    prev: dict[int, int] = {}
    q = deque([src])
    step = g.out if forward else g.in_
    while q:
        v = q.popleft()
        for w in sorted(step(v)):
            if w in allowed and w not in dist:
                dist[w] = dist[v] + 1
                prev[w] = v
                q.append(w)
    return dist, prev


def _path_to(prev: dict[int, int], src: int, dst: int) -> list[int]:
    path = [dst]
    while path[-1] != src:
        path.append(prev[path[-1]])
    return path[::-1]


def path_length_uniformity(ball: FiniteBall | Digraph, u: int, v: int) -> CheckReport:
    """Do all directed walks from u to v inside the ball have the same length?

    With R = desc(u) & anc(v) and d the directed distance from u, the
    lengths agree exactly when every arc x -> y of <R> has d(y) = d(x) + 1.
    Otherwise two walks of different lengths are returned.
    """
    g = _graph(ball)
    if u not in g or v not in g:
        raise InputError("unknown vertex")
    params = {"u": u, "v": v, "over": "directed walks"}
    region = _directed_reach(g, u, True) & _directed_reach(g, v, False)
    if not region:
        return CheckReport(EXACT_TRUE, None, params, {"length": None}, "no directed walk from u to v")
    dist, prev = _dir_dist(g, u, region)
    back, bprev = _dir_dist(g, v, region, forward=False)
    for x in sorted(region):
        for y in sorted(g.out(x)):
            if y in region and dist[y] != dist[x] + 1:
                to_v = _path_to(bprev, v, y)[::-1]
                walk1 = _path_to(prev, u, y) + to_v[1:]
                walk2 = _path_to(prev, u, x) + to_v
                w = {"walks": [walk1, walk2], "lengths": [len(walk1) - 1, len(walk2) - 1]}
                return CheckReport(EXACT_FALSE, w, params, {"regionSize": len(region)})
    return CheckReport(EXACT_TRUE, None, params, {"length": dist[v], "regionSize": len(region)})


def path_lengths_from(ball: FiniteBall | Digraph, u: int) -> CheckReport:
    """path_length_uniformity for u against every vertex at once.

    Every arc x -> y inside desc(u) lies on a walk from u to y, so all pairs
    (u, v) are uniform exactly when each such arc has d(y) = d(x) + 1.
    """
    g = _graph(ball)
    if u not in g:
        raise InputError("unknown vertex")
    region = _directed_reach(g, u, True)
    dist, _ = _dir_dist(g, u, region)
    for x in sorted(region):
        for y in sorted(g.out(x)):
            if dist[y] != dist[x] + 1:
                return path_length_uniformity(g, u, y)
    return CheckReport(EXACT_TRUE, None, {"u": u, "over": "directed walks"},
                       {"reached": len(region)})


# ---------------------------------------------------------------- level functions

@dataclass(frozen=True)
class LevelFunction:
    levels: dict[int, int]
    consistent: bool
    conflict_cycle: list[int] | None = None
    signs: list[int] | None = None

    @property
    def orientation_sum(self) -> int:
        return sum(self.signs) if self.signs else 0


def walk_signs(g: Digraph, walk: list[int]) -> list[int]:
    """+1 for each forward step, -1 for each backward step; raises on a non-step."""
    signs = []
    for a, b in zip(walk, walk[1:]):
        if g.has_arc(a, b):
            signs.append(1)
        elif g.has_arc(b, a):
            signs.append(-1)
        else:
            raise InputError(f"{a} and {b} are not adjacent")
    return signs


def _short_unbalanced_walk(g: Digraph, a: int, max_len: int) -> list[int] | None:
    """Shortest closed walk at ``a`` with nonzero orientation sum, up to ``max_len`` steps."""
    start = (a, 0)
    prev = {start: None}
    frontier = [start]
    for _ in range(max_len):
        nxt = []
        for state in frontier:
            v, p = state
            for w, s in [(w, 1) for w in sorted(g.out(v))] + [(w, -1) for w in sorted(g.in_(v))]:
                st = (w, p + s)
                if st in prev:
                    continue
                prev[st] = state
                if w == a and p + s != 0:
                    walk = [st]
                    while prev[walk[-1]] is not None:
                        walk.append(prev[walk[-1]])
                    return [x for x, _ in walk[::-1]]
                nxt.append(st)
        frontier = nxt
    return None


def level_assignment(ball: FiniteBall | Digraph) -> LevelFunction:
    """BFS potential with +1 along arcs and -1 against them.

    On a conflict, returns an unbalanced closed walk: the shortest one through
    the center (or through an endpoint of the first conflicting arc), found by
    a breadth-first search over (vertex, running sum) states.
    """
    g = _graph(ball)
    if len(weak_components(g)) > 1:
        raise InputError("level assignment needs a weakly connected digraph")
    if not len(g):
        return LevelFunction({}, True)
    root = ball.center if isinstance(ball, FiniteBall) else g.vertices[0]
    level = {root: 0}
    parent: dict[int, int] = {}
    q = deque([root])
    conflict = None
    while q:
        v = q.popleft()
        for w, s in [(w, 1) for w in sorted(g.out(v))] + [(w, -1) for w in sorted(g.in_(v))]:
            if w not in level:
                level[w] = level[v] + s
                parent[w] = v
                q.append(w)
            elif level[w] != level[v] + s and conflict is None:
                conflict = (v, w)
    if conflict is None:
        return LevelFunction(level, True)
    # fundamental cycle of the conflicting arc as a fallback and length bound
    v, w = conflict
    pv = [v]
    while pv[-1] != root:
        pv.append(parent[pv[-1]])
    pw = [w]
    while pw[-1] != root:
        pw.append(parent[pw[-1]])
    common = set(pv) & set(pw)
    pv = pv[:next(i for i, x in enumerate(pv) if x in common) + 1]
    pw = pw[:pw.index(pv[-1]) + 1]
    fund = pv[::-1] + pw
    best = fund
    for a in (root, v):
        walk = _short_unbalanced_walk(g, a, len(best) - 1)
        if walk is not None and len(walk) < len(best):
            best = walk
    return LevelFunction(level, False, best, walk_signs(g, best))


def spanning_tree_balanced(g: Digraph) -> bool:
    """Cross-check: every fundamental cycle of a BFS spanning tree is balanced."""
    if not len(g):
        return True
    root = g.vertices[0]
    level = {root: 0}
    q = deque([root])
    tree = set()
    while q:
        v = q.popleft()
        for w, s in [(w, 1) for w in g.out(v)] + [(w, -1) for w in g.in_(v)]:
            if w not in level:
                level[w] = level[v] + s
                tree.add((v, w) if s == 1 else (w, v))
                q.append(w)
    return all(level[b] == level[a] + 1 for a, b in g.arcs if (a, b) not in tree)


# ---------------------------------------------------------------- triangles and ends

@dataclass(frozen=True)
class TriangleProfile:
    center: int
    triangles: list[tuple[int, int, int]]
    residue: frozenset[int]

    @property
    def disjoint_apart_from_center(self) -> bool:
        seen: set[int] = set()
        for _, a, b in self.triangles:
            if a in seen or b in seen:
                return False
            seen.update((a, b))
        return True


def triangle_profile(ball: FiniteBall, u: int) -> TriangleProfile:
    """Directed triangles u -> v -> w -> u and the neighbours lying on none."""
    if u not in ball.interior:
        raise InputError(f"vertex {u} is not interior")
    g = ball.graph
    tris = []
    for v in sorted(g.out(u)):
        for w in sorted(g.out(v)):
            if g.has_arc(w, u):
                tris.append((u, v, w))
    covered = {x for t in tris for x in t[1:]}
    residue = frozenset((g.out(u) | g.in_(u)) - covered)
    return TriangleProfile(u, tris, residue)


def ends_probe(ball: FiniteBall, cut: Iterable[int]) -> int:
    """Components of ball minus ``cut`` that reach a non-interior vertex."""
    cut = set(cut)
    g = ball.graph
    if not cut <= set(g.vertices):
        raise InputError("cut contains unknown vertices")
    rest = induced_subdigraph(g, set(g.vertices) - cut)
    return sum(1 for comp in weak_components(rest) if any(v not in ball.interior for v in comp))
