"""Digraph operators: line digraph, tensor product, arc contraction."""
from __future__ import annotations

from typing import Iterable

from ..digraph import Arc, Digraph, FiniteBall, MixedGraph, bfs_depths
from ..errors import ContractError, InputError


def line_digraph(d: Digraph) -> tuple[Digraph, list[Arc]]:
    """L(D) on the arcs of ``d``; returns the digraph and the arc behind each id."""
    arcs = d.sorted_arcs()
    idx = {a: i for i, a in enumerate(arcs)}
    out = []
    for (u, v), i in idx.items():
        for w in sorted(d.out(v)):
            out.append((i, idx[(v, w)]))
    return Digraph(range(len(arcs)), out), arcs


def line_ball(ball: FiniteBall) -> tuple[FiniteBall, list[Arc]]:
    """Line digraph of a ball with completeness carried over.

    The arc (u, v) has all its in-neighbours exactly when u is in-complete,
    and all its out-neighbours exactly when v is out-complete.  The base is
    the smallest arc leaving the old center (or entering it, if none leave).
    """
    g = ball.graph
    ld, arcs = line_digraph(g)
    if not arcs:
        raise InputError("line digraph of an arcless ball is empty")
    oc = {i for i, (u, v) in enumerate(arcs) if v in ball.out_complete}
    ic = {i for i, (u, v) in enumerate(arcs) if u in ball.in_complete}
    c = ball.center
    leaving = sorted(i for i, (u, v) in enumerate(arcs) if u == c)
    entering = sorted(i for i, (u, v) in enumerate(arcs) if v == c)
    base = (leaving or entering or [0])[0]
    depth = bfs_depths(ld, [base])
    if len(depth) != len(arcs):
        raise InputError("ball must be weakly connected")
    return (FiniteBall(ld, base, max(depth.values()), frozenset(oc & ic), depth,
                       frozenset(oc), frozenset(ic)), arcs)


def directed_k2() -> Digraph:
    """The single arc a -> b, with a = 0 and b = 1."""
    return Digraph([0, 1], [(0, 1)])


def tensor_product(g: Digraph | MixedGraph, h: Digraph) -> Digraph:
    """(a,b) -> (c,d) iff a -> c in g (undirected edges count both ways) and b -> d in h.

    The pair (a, b) gets id ``i * len(h) + j`` where i, j are the positions of
    a and b in the sorted vertex lists.
    """
    gv, hv = list(g.vertices), list(h.vertices)
    gi = {v: i for i, v in enumerate(gv)}
    hi = {v: j for j, v in enumerate(hv)}
    m = len(hv)
    g_pairs = set(g.arcs)
    for u, v in getattr(g, "edges", ()):
        g_pairs.add((u, v))
        g_pairs.add((v, u))
    arcs = []
    for a, c in g_pairs:
        for b, d in h.arcs:
            arcs.append((gi[a] * m + hi[b], gi[c] * m + hi[d]))
    return Digraph(range(len(gv) * m), arcs)


def tensor_id(g: Digraph | MixedGraph, h: Digraph, a: int, b: int) -> int:
    gv, hv = list(g.vertices), list(h.vertices)
    return gv.index(a) * len(hv) + hv.index(b)


def contract_matching(g: Digraph, arcs_to_contract: Iterable[Arc]) -> tuple[Digraph, dict[int, int]]:
    """Merge the endpoints of each listed arc into its tail.

    Returns the contracted digraph and the old->new vertex map.  Raises
    ContractError when the arcs overlap, are missing, or the merge would
    create a symmetric pair.
    """
    rep: dict[int, int] = {v: v for v in g.vertices}
    seen: set[int] = set()
    for u, v in arcs_to_contract:
        if not g.has_arc(u, v):
            raise ContractError(f"({u}, {v}) is not an arc")
        if u in seen or v in seen:
            raise ContractError(f"arc ({u}, {v}) shares an endpoint with another contracted arc")
        seen.update((u, v))
        rep[v] = u
    new_arcs = set()
    for u, v in g.arcs:
        a, b = rep[u], rep[v]
        if a == b:
            # only the contracted arc itself joins two merged endpoints
            continue
        new_arcs.add((a, b))
    for a, b in new_arcs:
        if (b, a) in new_arcs:
            raise ContractError(f"contraction creates a symmetric pair {a} <-> {b}")
    return Digraph(set(rep.values()), new_arcs), rep
