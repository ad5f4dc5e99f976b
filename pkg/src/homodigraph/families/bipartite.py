"""Small bipartite graphs: even cycles, complete bipartite graphs,
complements of perfect matchings and finite pieces of semiregular trees."""
from __future__ import annotations

from ..digraph import BipartiteGraph
from ..errors import InputError
from ..iso import find_isomorphisms


def cycle(m: int) -> BipartiteGraph:
    """Even cycle C_m; X holds the even positions."""
    if m < 4 or m % 2:
        raise InputError(f"bipartite cycle needs an even length >= 4, got {m}")
    h = m // 2
    xs = list(range(h))
    ys = list(range(h, m))
    # position 2i -> x_i, position 2i+1 -> y_i
    edges = []
    for i in range(h):
        edges.append((xs[i], ys[i]))
        edges.append((xs[(i + 1) % h], ys[i]))
    return BipartiteGraph(xs, ys, edges)


def complete(m: int, n: int) -> BipartiteGraph:
    if m < 1 or n < 1:
        raise InputError("complete bipartite parts must be non-empty")
    xs = list(range(m))
    ys = list(range(m, m + n))
    return BipartiteGraph(xs, ys, [(x, y) for x in xs for y in ys])


def cp(n: int) -> BipartiteGraph:
    """K_{n,n} minus the perfect matching x_i -- y_i."""
    if n < 1:
        raise InputError("cp(n) needs n >= 1")
    xs = list(range(n))
    ys = list(range(n, 2 * n))
    return BipartiteGraph(xs, ys, [(xs[i], ys[j]) for i in range(n) for j in range(n) if i != j])


def tree_fragment(a: int, b: int, depth: int) -> BipartiteGraph:
    """Ball of radius ``depth`` in the semiregular tree T_{a,b} around an X vertex.

    X vertices have degree ``a`` and Y vertices degree ``b`` in the infinite
    tree.  Vertices at the cut-off distance carry the label suffix ``*``.
    """
    if a < 1 or b < 1 or depth < 0:
        raise InputError("tree fragment needs a, b >= 1 and depth >= 0")
    xs, ys, edges = [0], [], []
    level = {0: 0}
    frontier = [0]
    nxt_id = 1
    for d in range(depth):
        new = []
        for v in frontier:
            in_x = d % 2 == 0
            want = a if in_x else b
            have = 0 if v == 0 else 1
            for _ in range(want - have):
                w = nxt_id
                nxt_id += 1
                level[w] = d + 1
                (ys if in_x else xs).append(w)
                edges.append((v, w) if in_x else (w, v))
                new.append(w)
        frontier = new
    labels = {v: f"{'x' if v in set(xs) else 'y'}{v}{'*' if level[v] == depth and depth else ''}"
              for v in level}
    return BipartiteGraph(xs, ys, edges, labels)


def make_bipartite(kind: str, *params: int) -> BipartiteGraph:
    """Dispatch on ``kind`` in {cycle, complete, cp, tree-fragment}."""
    builders = {"cycle": cycle, "complete": complete, "cp": cp, "tree-fragment": tree_fragment}
    if kind not in builders:
        raise InputError(f"unknown bipartite kind {kind!r}")
    try:
        return builders[kind](*params)
    except TypeError as exc:
        raise InputError(f"wrong parameters for {kind}: {params}") from exc


def is_edge_transitive(b: BipartiteGraph) -> bool:
    """Part-preserving automorphisms act transitively on the edges."""
    edges = sorted(b.edges)
    if len(edges) <= 1:
        return True
    d = b.to_digraph()
    colors = b.part_colors()
    x0, y0 = edges[0]
    for x, y in edges[1:]:
        if not find_isomorphisms(d, d, 1, fixed={x0: x, y0: y}, colors1=colors, colors2=colors):
            return False
    return True
