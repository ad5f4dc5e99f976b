"""Y_n by recursive gluing of alternating 2n-cycles.

A cycle is named by the tuple of pair indices leading to it from the root
cycle ``()``.  Position j of a cycle with parity offset ``off`` is a source
(two out-arcs inside the cycle) when ``j + off`` is even.  The child glued at
the antipodal pair (p, p+n) has those two vertices at its positions 0 and n;
each glued vertex switches role, so it ends with in- and out-degree 2.
"""
from __future__ import annotations

from ..digraph import Digraph, bfs_depths
from ..errors import InputError
from .base import LabeledBall
from ..digraph import FiniteBall


def make_y_ball(n: int, depth: int, swap: bool = False, mirror: bool = False) -> LabeledBall:
    """Root cycle plus ``depth`` generations of glued cycles.

    ``swap`` glues the child's position 0 to the parent's p+n instead of p;
    ``mirror`` runs the child's positions the other way round.  Both are
    alternative gluing conventions and give isomorphic results.
    """
    if n < 3:
        raise InputError("Y_n needs n >= 3")
    if depth < 0:
        raise InputError("depth must be non-negative")
    m = 2 * n
    # vertex key -> id; a vertex is keyed by its position on the oldest cycle holding it
    ids: dict[tuple, int] = {}
    labels: dict[int, str] = {}
    arcs: list[tuple[int, int]] = []
    cycles_of: dict[int, int] = {}

    def vid(key: tuple) -> int:
        if key not in ids:
            ids[key] = len(ids)
            cyc, j = key
            labels[ids[key]] = f"{'.'.join(map(str, cyc)) or 'o'}:{j}"
        return ids[key]

    # (cycle name, offset, list of vertex ids by position, generation)
    todo = [((), 0, [vid(((), j)) for j in range(m)], 0)]
    while todo:
        name, off, verts, gen = todo.pop(0)
        for j in range(m):
            a, b = verts[j], verts[(j + 1) % m]
            arcs.append((a, b) if (j + off) % 2 == 0 else (b, a))
            cycles_of[a] = cycles_of.get(a, 0) + 1
        if gen == depth:
            continue
        for p in range(0 if not name else 1, n):
            u, v = verts[p], verts[p + n]
            if swap:
                u, v = v, u
                u_tail = (p + n + off) % 2 == 0
            else:
                u_tail = (p + off) % 2 == 0
            child = name + (p,)
            c_off = 1 if u_tail else 0
            cv = [vid((child, j)) if j not in (0, n) else None for j in range(m)]
            cv[0], cv[n] = u, v
            if mirror:
                cv = [cv[(-j) % m] for j in range(m)]
            todo.append((child, c_off, cv, gen + 1))
    g = Digraph(range(len(ids)), arcs)
    full = {v for v, c in cycles_of.items() if c == 2}
    depth_map = bfs_depths(g, [0])
    fb = FiniteBall(g, 0, max(depth_map.values()), frozenset(full), depth_map,
                    frozenset(full), frozenset(full))
    return LabeledBall(fb, labels, f"y:{n}", {v: k for k, v in ids.items()})
