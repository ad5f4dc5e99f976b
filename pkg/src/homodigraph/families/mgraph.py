"""The M(n,k) pipeline: T_{n,k} -> T*_{n,k} -> (x) K2 -> contract cycle arcs.

M(n,k) vertex names are ``[g,i]``: the contraction of ((g,i), a) with
((g*a_i, i), b).  Working through the pipeline gives the arcs
[g,i] -> [g*a_j^-1, j] for every j != i, which is also used below to decide
when a vertex of a finite piece has its full neighbourhood.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..digraph import Arc, Digraph, MixedGraph, bfs_depths
from ..errors import InputError
from .base import LabeledBall, restrict_ball
from .cayley import Word, make_cayley_free_product_ball, multiply, parse_word, word_label
from .operators import contract_matching, directed_k2, tensor_product


@dataclass(frozen=True)
class StarExpansion:
    """T*_{n,k} piece.  Vertex ``n*c + (i-1)`` is clique vertex i of Cayley id c."""

    graph: MixedGraph
    labels: dict[int, str]
    cycle_arcs: tuple[Arc, ...]
    n: int
    k: int


def _parse_family(family: str) -> tuple[int, int]:
    try:
        kind, params = family.split(":")
        n, k = (int(p) for p in params.split(","))
    except ValueError:
        raise InputError(f"not a free-product ball: {family!r}") from None
    if kind not in ("cayley", "t"):
        raise InputError(f"not a free-product ball: {family!r}")
    return n, k


def star_expand(lb: LabeledBall, n: int | None = None, k: int | None = None) -> StarExpansion:
    """Replace every group element by a K_n, one clique vertex per incident cycle.

    The group structure is read back from the vertex labels, so the input
    must come from :func:`make_cayley_free_product_ball`.  For k = 2 the
    two-way cycle pairs become undirected edges; ``cycle_arcs`` lists both
    orientations for them.
    """
    if n is None or k is None:
        n, k = _parse_family(lb.family) if lb.family.startswith(("cayley", "t:")) else (n, k)
        if lb.family.startswith("t:"):
            n, k = int(lb.family[2:]), 3
    if n is None or k is None:
        raise InputError("cannot infer (n, k) from the ball")
    ids: dict[Word, int] = {}
    for v, lab in lb.labels.items():
        ids[parse_word(lab, n, k)] = v
    g = lb.graph
    verts, arcs, edges, cycle = [], [], [], []
    labels = {}
    for word, c in ids.items():
        for i in range(1, n + 1):
            vid = n * c + i - 1
            verts.append(vid)
            labels[vid] = f"({word_label(word)}|{i})"
            for j in range(i + 1, n + 1):
                edges.append((vid, n * c + j - 1))
            nxt = multiply(word, i, 1, k)
            if nxt in ids:
                d = n * ids[nxt] + i - 1
                if not (g.has_arc(c, ids[nxt]) or g.has_arc(ids[nxt], c)):
                    raise InputError("labels disagree with the arcs of the ball")
                if k == 2:
                    if c < ids[nxt]:
                        edges.append((vid, d))
                    cycle.append((vid, d))
                else:
                    arcs.append((vid, d))
                    cycle.append((vid, d))
    return StarExpansion(MixedGraph(verts, arcs, edges), labels, tuple(sorted(cycle)), n, k)


def _m_name(g: Word, i: int) -> str:
    return f"[{word_label(g)},{i}]"


def m_out(g: Word, i: int, n: int, k: int) -> list[tuple[Word, int]]:
    return [(multiply(g, j, -1, k), j) for j in range(1, n + 1) if j != i]


def m_in(g: Word, i: int, n: int, k: int) -> list[tuple[Word, int]]:
    h = multiply(g, i, 1, k)
    return [(h, j) for j in range(1, n + 1) if j != i]


def build_m_piece(n: int, k: int, cayley_radius: int) -> tuple[Digraph, dict[int, tuple[Word, int]]]:
    """Run the full pipeline on a Cayley ball; returns M-piece and vertex names."""
    cb = make_cayley_free_product_ball(n, k, cayley_radius)
    star = star_expand(cb, n, k)
    k2 = directed_k2()
    tp = tensor_product(star.graph, k2)
    sv = list(star.graph.vertices)
    pos = {v: i for i, v in enumerate(sv)}
    to_contract = [(pos[x] * 2, pos[y] * 2 + 1) for x, y in star.cycle_arcs]
    m, rep = contract_matching(tp, to_contract)
    words = {v: parse_word(cb.labels[v], n, k) for v in cb.labels}
    names: dict[int, tuple[Word, int]] = {}
    for sid in sv:
        c, i = divmod(sid, n)
        i += 1
        g = words[c]
        a_id = pos[sid] * 2
        b_id = a_id + 1
        names.setdefault(rep[a_id], (g, i))
        # a lone level-b copy of (h, i) belongs to [h*a_i^-1, i]
        names.setdefault(rep[b_id], (multiply(g, i, -1, k), i))
    return m, names


def make_m_ball(n: int, k: int, r: int, base: str = "block") -> LabeledBall:
    """Ball of M(n,k) of radius ``r`` around the identity block (or vertex [e,1]).

    The block of the identity is the CP_n spanned by the [e,i] and their
    out-neighbours.  The Cayley ball feeding the pipeline grows until every
    vertex within distance r-1 of the base has its full neighbourhood.
    """
    if n < 3 or k < 2:
        raise InputError("M(n,k) needs n >= 3 and k >= 2")
    if r < 0:
        raise InputError("radius must be non-negative")
    if base not in ("block", "vertex"):
        raise InputError("base must be 'block' or 'vertex'")
    big = r + 1
    while True:
        m, names = build_m_piece(n, k, big)
        by_name = {nm: v for v, nm in names.items()}
        if base == "block":
            start = [(((), i)) for i in range(1, n + 1)]
            start += [(multiply((), j, -1, k), j) for j in range(1, n + 1)]
        else:
            start = [((), 1)]
        if all(s in by_name for s in start):
            base_ids = [by_name[s] for s in start]
            depth = bfs_depths(m, base_ids, limit=r)
            complete = set()
            for v in depth:
                g, i = names[v]
                outs = [by_name.get(x) for x in m_out(g, i, n, k)]
                ins = [by_name.get(x) for x in m_in(g, i, n, k)]
                if (None not in outs and None not in ins
                        and all(m.has_arc(v, w) for w in outs)
                        and all(m.has_arc(w, v) for w in ins)):
                    complete.add(v)
            if all(v in complete for v, d in depth.items() if d <= r - 1):
                break
        big += 1
    # order: by depth then by name, so ids do not depend on pipeline internals
    keep = sorted(depth, key=lambda v: (depth[v], _m_name(*names[v])))
    fb, new_id = restrict_ball(m, keep, base_ids, r, complete, complete)
    labels = {new_id[v]: _m_name(*names[v]) for v in keep}
    keys = {new_id[v]: names[v] for v in keep}
    return LabeledBall(fb, labels, f"m:{n},{k}", keys)
