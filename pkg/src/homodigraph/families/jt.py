"""J(r): vertex set Z x {1..r} with every arc (i, x) -> (i+1, y)."""
from __future__ import annotations

from ..digraph import Digraph, FiniteBall
from ..errors import InputError
from .base import LabeledBall


def make_j_segment(r: int, m: int) -> LabeledBall:
    """Levels -m..m; the level-0 fibre is the base and levels |i| < m are interior."""
    if r < 1 or m < 1:
        raise InputError("J segment needs r >= 1 and m >= 1")
    keys = [(i, x) for i in range(-m, m + 1) for x in range(1, r + 1)]
    # put the level-0 fibre first so the center is vertex 0
    keys.sort(key=lambda t: (abs(t[0]), t[0] < 0, t[0], t[1]))
    ids = {key: n for n, key in enumerate(keys)}
    arcs = [(ids[(i, x)], ids[(i + 1, y)])
            for i in range(-m, m) for x in range(1, r + 1) for y in range(1, r + 1)]
    g = Digraph(range(len(keys)), arcs)
    interior = frozenset(ids[k] for k in keys if abs(k[0]) < m)
    # the bottom level keeps all its out-arcs, the top level all its in-arcs
    out_c = interior | {ids[(-m, x)] for x in range(1, r + 1)}
    in_c = interior | {ids[(m, x)] for x in range(1, r + 1)}
    depth = {ids[k]: abs(k[0]) for k in keys}
    fb = FiniteBall(g, 0, m, interior, depth, out_c, in_c)
    return LabeledBall(fb, {ids[k]: f"({k[0]},{k[1]})" for k in keys}, f"j:{r}",
                       {ids[k]: k for k in keys})
