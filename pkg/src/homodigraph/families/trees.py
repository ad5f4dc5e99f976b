"""Directed trees with constant out-degree a and in-degree b.

This is DL(T_{a,b}): its reachability digraph is the semiregular tree
T_{a,b}, so it stands in for DL over an infinite tree base.
"""
from __future__ import annotations

from ..errors import InputError
from .base import LabeledBall, implicit_ball


def make_directed_tree_ball(a: int, b: int, r: int) -> LabeledBall:
    """Ball of radius ``r`` around the root of the (a out, b in) directed tree.

    A vertex is a reduced word of steps ``('+', i)`` and ``('-', j)``; the
    arc back to the parent always carries label 0 on the child's side.
    """
    if a < 1 or b < 1:
        raise InputError("directed tree needs a, b >= 1")

    def out_fn(t):
        came_down = bool(t) and t[-1][0] == "-"
        return [t[:-1] if came_down and i == 0 else t + (("+", i),) for i in range(a)]

    def in_fn(t):
        came_up = bool(t) and t[-1][0] == "+"
        return [t[:-1] if came_up and j == 0 else t + (("-", j),) for j in range(b)]

    def label(t):
        return "".join(f"{s}{i}" for s, i in t) or "o"

    return implicit_ball([()], out_fn, in_fn, r, label, f"tree:{a},{b}")


def make_directed_cycle(n: int) -> LabeledBall:
    """D_n as a finite ball: every vertex complete."""
    from ..digraph import Digraph
    from .base import finite_ball
    if n < 3:
        raise InputError("directed cycle needs n >= 3")
    g = Digraph(range(n), [(i, (i + 1) % n) for i in range(n)])
    fb = finite_ball(g, [0])
    return LabeledBall(fb, {i: str(i) for i in range(n)}, f"dcycle:{n}")
