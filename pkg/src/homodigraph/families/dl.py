"""Balls in DL(B): one copy of an edge-transitive bipartite graph B per
vertex of a directed tree, glued along tree arcs.

The tree T has in-valency |X| and out-valency |Y|.  A tree vertex is a
reduced word of steps ``('+', y)`` (follow the out-arc labelled y) and
``('-', x)`` (follow the in-arc labelled x) from a root.  A DL vertex is a
tree arc (a, b); it points to (b, d) exactly when the label of a at b and the
label of d at b form an edge of B.
"""
from __future__ import annotations

from typing import Sequence

from ..digraph import BipartiteGraph
from ..errors import InputError
from .base import LabeledBall, implicit_ball
from .bipartite import is_edge_transitive

Step = tuple[str, int]
Word = tuple[Step, ...]


class _Tree:
    """Implicit directed tree with per-vertex arc labellings.

    The arc a tree vertex shares with its parent gets a "back label".  By
    default that is the first vertex of the relevant part (the lexicographic
    choice); ``twist`` rotates it with the word length, which is a different
    but equally valid choice of bijections.
    """

    def __init__(self, xs: Sequence[int], ys: Sequence[int], twist: bool = False):
        self.xs = list(xs)
        self.ys = list(ys)
        self.twist = twist

    def back_x(self, t: Word) -> int:
        return self.xs[len(t) % len(self.xs)] if self.twist else self.xs[0]

    def back_y(self, t: Word) -> int:
        return self.ys[(len(t) * 7 + 1) % len(self.ys)] if self.twist else self.ys[0]

    def out_arcs(self, t: Word) -> list[tuple[int, Word]]:
        """Pairs (psi_t label, out-neighbour)."""
        res = []
        came_down = bool(t) and t[-1][0] == "-"
        for y in self.ys:
            if came_down and y == self.back_y(t):
                res.append((y, t[:-1]))
            else:
                res.append((y, t + (("+", y),)))
        return res

    def in_arcs(self, t: Word) -> list[tuple[int, Word]]:
        """Pairs (phi_t label, in-neighbour)."""
        res = []
        came_up = bool(t) and t[-1][0] == "+"
        for x in self.xs:
            if came_up and x == self.back_x(t):
                res.append((x, t[:-1]))
            else:
                res.append((x, t + (("-", x),)))
        return res

    def phi(self, b: Word, a: Word) -> int:
        for x, w in self.in_arcs(b):
            if w == a:
                return x
        raise InputError("not a tree arc")

    def psi(self, b: Word, d: Word) -> int:
        for y, w in self.out_arcs(b):
            if w == d:
                return y
        raise InputError("not a tree arc")


def _word_str(t: Word) -> str:
    return "".join(f"{s}{v}" for s, v in t) or "o"


def make_dl_ball(b: BipartiteGraph, r: int, twist: bool = False,
                 check_edge_transitive: bool = True) -> LabeledBall:
    """Radius-``r`` ball of DL(B) around the tree arc leaving the root via Y[0].

    Rejects B unless it is edge transitive (otherwise different choices of
    arc labellings can produce non-isomorphic digraphs) and connected.
    """
    if not b.part_x or not b.part_y:
        raise InputError("both parts must be non-empty")
    if not b.is_connected():
        raise InputError("DL base must be connected")
    if check_edge_transitive and not is_edge_transitive(b):
        raise InputError("DL base must be edge transitive: different labellings of a "
                         "non-edge-transitive base can give non-isomorphic digraphs")
    tree = _Tree(sorted(b.part_x), sorted(b.part_y), twist)
    edges = b.edges

    def out_fn(arc):
        a, t = arc
        x = tree.phi(t, a)
        return [(t, d) for y, d in tree.out_arcs(t) if (x, y) in edges]

    def in_fn(arc):
        c, d = arc
        y = tree.psi(c, d)
        return [(a, c) for x, a in tree.in_arcs(c) if (x, y) in edges]

    root: Word = ()
    base = (root, tree.out_arcs(root)[0][1])
    return implicit_ball([base], out_fn, in_fn, r,
                         lambda arc: f"{_word_str(arc[0])}>{_word_str(arc[1])}", "dl")
