"""Shared plumbing for family constructors."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from ..digraph import Digraph, FiniteBall, bfs_depths
from ..errors import InputError

NeighbourFn = Callable[[Hashable], Sequence[Hashable]]


@dataclass(frozen=True)
class LabeledBall:
    """A FiniteBall plus a human-readable name per vertex.

    ``keys`` holds the construction-native object behind each id (group word,
    tree arc, ...); it is not serialised.
    """

    ball: FiniteBall
    labels: Mapping[int, str]
    family: str = ""
    keys: Mapping[int, Hashable] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        if set(self.labels) != set(self.ball.graph.vertices):
            raise InputError("labels must cover exactly the ball's vertices")
        if len(set(self.labels.values())) != len(self.labels):
            raise InputError("labels must be injective")

    @property
    def graph(self) -> Digraph:
        return self.ball.graph

    def id_of(self, label: str) -> int:
        for v, lab in self.labels.items():
            if lab == label:
                return v
        raise InputError(f"no vertex labelled {label!r}")


def implicit_ball(start: Iterable[Hashable], out_fn: NeighbourFn, in_fn: NeighbourFn,
                  radius: int, label_fn: Callable[[Hashable], str],
                  family: str = "") -> LabeledBall:
    """Breadth-first truncation of an implicitly given digraph.

    ``start`` is the base object (one vertex, or several for a block).  Ids
    are assigned in discovery order, which is deterministic as long as the
    neighbour functions are.  One-sided completeness is recorded exactly:
    a rim vertex whose out-neighbours all lie inside is out-complete.
    """
    if radius < 0:
        raise InputError("radius must be non-negative")
    starts = list(dict.fromkeys(start))
    if not starts:
        raise InputError("empty base object")
    depth: dict[Hashable, int] = {}
    order: list[Hashable] = []
    queue: deque[Hashable] = deque()
    for s in starts:
        depth[s] = 0
        order.append(s)
        queue.append(s)
    outs: dict[Hashable, list[Hashable]] = {}
    ins: dict[Hashable, list[Hashable]] = {}
    while queue:
        v = queue.popleft()
        outs[v] = list(out_fn(v))
        ins[v] = list(in_fn(v))
        if depth[v] >= radius:
            continue
        for w in outs[v] + ins[v]:
            if w not in depth:
                depth[w] = depth[v] + 1
                order.append(w)
                queue.append(w)
    ids = {key: i for i, key in enumerate(order)}
    arcs = set()
    out_c, in_c = set(), set()
    for key in order:
        if all(w in ids for w in outs[key]):
            out_c.add(ids[key])
        if all(w in ids for w in ins[key]):
            in_c.add(ids[key])
        for w in outs[key]:
            if w in ids:
                arcs.add((ids[key], ids[w]))
    g = Digraph(range(len(order)), arcs)
    interior = frozenset(out_c & in_c & {ids[k] for k in order if depth[k] <= radius - 1})
    ball = FiniteBall(g, 0, radius, interior, {ids[k]: depth[k] for k in order},
                      frozenset(out_c), frozenset(in_c))
    return LabeledBall(ball, {ids[k]: label_fn(k) for k in order}, family,
                       {ids[k]: k for k in order})


def finite_ball(g: Digraph, base: Iterable[int], radius: int | None = None,
                complete: Iterable[int] | None = None,
                out_complete: Iterable[int] | None = None,
                in_complete: Iterable[int] | None = None) -> FiniteBall:
    """Wrap a finite digraph as a FiniteBall around a base set.

    Completeness defaults to every vertex (the digraph is the whole object).
    """
    base = sorted(set(base))
    depth = bfs_depths(g, base)
    if len(depth) != len(g):
        raise InputError("digraph is not connected to its base")
    r = max(depth.values()) if radius is None else radius
    verts = set(g.vertices)
    oc = verts if out_complete is None else set(out_complete)
    ic = verts if in_complete is None else set(in_complete)
    comp = (oc & ic) if complete is None else set(complete) & oc & ic
    return FiniteBall(g, base[0], r, frozenset(comp), depth, frozenset(oc), frozenset(ic))


def restrict_ball(g: Digraph, keep: Iterable[int], base: Iterable[int], radius: int,
                  out_complete: Iterable[int], in_complete: Iterable[int]
                  ) -> tuple[FiniteBall, dict[int, int]]:
    """Induce ``g`` on ``keep`` and renumber densely (in order of ``keep``).

    ``out_complete``/``in_complete`` describe the parent piece; a kept vertex
    stays complete only if its neighbours all survive the restriction.
    Returns the new ball and the old->new id map.
    """
    keep = list(dict.fromkeys(keep))
    new_id = {v: i for i, v in enumerate(keep)}
    oc_in, ic_in = set(out_complete), set(in_complete)
    arcs = [(new_id[u], new_id[v]) for u, v in g.arcs if u in new_id and v in new_id]
    h = Digraph(range(len(keep)), arcs)
    oc = {new_id[v] for v in keep if v in oc_in and g.out(v) <= new_id.keys()}
    ic = {new_id[v] for v in keep if v in ic_in and g.in_(v) <= new_id.keys()}
    base_new = [new_id[b] for b in base]
    depth = bfs_depths(h, base_new)
    interior = {v for v in oc & ic if depth[v] <= radius - 1}
    fb = FiniteBall(h, base_new[0], radius, frozenset(interior), depth, frozenset(oc), frozenset(ic))
    return fb, new_id
