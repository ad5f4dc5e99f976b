"""Exhaustive census of small connected bipartite graphs that are
connected-homogeneous (with the bipartition preserved)."""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .digraph import BipartiteGraph
from .errors import InputError
from .families.bipartite import complete, cp, cycle
from .reachability import classify_bipartite_shape
from .symmetry import EXACT_TRUE, check_bipartite_c_homogeneity

Code = tuple[int, int, tuple[int, ...]]

DEFAULT_MAX = 8


def _side_code(rows: list[int], p: int, q: int) -> tuple[int, ...]:
    """Smallest sorted column-mask tuple over all orderings of the p rows.

    ``rows[i]`` is a q-bit mask of the neighbours of x_i.
    """
    best = None
    for perm in itertools.permutations(range(p)):
        cols = []
        for j in range(q):
            mask = 0
            for pos, i in enumerate(perm):
                if rows[i] >> j & 1:
                    mask |= 1 << pos
            cols.append(mask)
        code = tuple(sorted(cols))
        if best is None or code < best:
            best = code
    return best


def canonical_code(b: BipartiteGraph) -> Code:
    """Invariant of bipartite graphs up to isomorphism, parts allowed to swap.

    The smaller part is listed first; with equal parts both choices are
    tried and the smaller code wins.
    """
    xs, ys = list(b.part_x), list(b.part_y)
    options = [(xs, ys)] if len(xs) < len(ys) else [(ys, xs)] if len(ys) < len(xs) else [(xs, ys), (ys, xs)]
    best = None
    for a, c in options:
        ci = {v: j for j, v in enumerate(c)}
        rows = [sum(1 << ci[w] for w in b.nbrs(v)) for v in a]
        code = (len(a), len(c), _side_code(rows, len(a), len(c)))
        if best is None or code < best:
            best = code
    return best


def from_code(code: Code) -> BipartiteGraph:
    p, q, cols = code
    xs = list(range(p))
    ys = list(range(p, p + q))
    edges = [(i, p + j) for j, mask in enumerate(cols) for i in range(p) if mask >> i & 1]
    return BipartiteGraph(xs, ys, edges)


def _connected(p: int, q: int, rows: list[int]) -> bool:
    cols = [sum(1 << i for i in range(p) if rows[i] >> j & 1) for j in range(q)]
    seen_x, seen_y = 1, 0
    while True:
        ny = 0
        for i in range(p):
            if seen_x >> i & 1:
                ny |= rows[i]
        nx = 0
        for j in range(q):
            if ny >> j & 1:
                nx |= cols[j]
        nx |= seen_x
        if nx == seen_x and ny == seen_y:
            break
        seen_x, seen_y = nx, ny
    return seen_x == (1 << p) - 1 and seen_y == (1 << q) - 1


def enumerate_connected_bipartite(n_max: int) -> Iterator[BipartiteGraph]:
    """Every connected bipartite graph on 2..n_max vertices once, up to isomorphism.

    Generate-and-reject: all biadjacency matrices for each split p <= q,
    kept when connected and when their canonical code is new.  Output is in
    code order, so it is deterministic.
    """
    if n_max < 2:
        raise InputError("n_max must be at least 2")
    for n in range(2, n_max + 1):
        codes = set()
        for p in range(1, n // 2 + 1):
            q = n - p
            for rows in itertools.product(range(1, 1 << q), repeat=p):
                rows = list(rows)
                if not _connected(p, q, rows):
                    continue
                code = (p, q, _side_code(rows, p, q))
                if p == q:
                    b = from_code(code)
                    code = canonical_code(b)
                codes.add(code)
        for code in sorted(codes):
            yield from_code(code)


def brute_force_connected_bipartite(n_max: int) -> list[frozenset]:
    """Independent generator: all labelled graphs, filtered, deduplicated by
    trying every vertex permutation.  Only sensible for n_max <= 5."""
    found = []
    for n in range(2, n_max + 1):
        pairs = list(itertools.combinations(range(n), 2))
        classes = set()
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            adj = {v: set() for v in range(n)}
            for a, b in edges:
                adj[a].add(b)
                adj[b].add(a)
            color = {0: 0}
            stack = [0]
            ok = True
            while stack and ok:
                v = stack.pop()
                for w in adj[v]:
                    if w not in color:
                        color[w] = 1 - color[v]
                        stack.append(w)
                    elif color[w] == color[v]:
                        ok = False
            if not ok or len(color) != n:
                continue
            canon = min(tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
                        for perm in itertools.permutations(range(n)))
            classes.add((n, canon))
        found.extend(frozenset(c[1]) for c in sorted(classes))
    return found


def theorem_members(n_max: int) -> dict[Code, str]:
    """Codes of every listed family member with at most n_max vertices."""
    members: dict[Code, str] = {}

    def add(b, name):
        members.setdefault(canonical_code(b), name)

    for n in range(3, n_max // 2 + 1):
        add(cp(n), f"cp({n})")
    for m in range(1, n_max):
        for n in range(m, n_max - m + 1):
            add(complete(m, n), f"complete-bipartite({m},{n})")
    for m in range(4, n_max + 1, 2):
        add(cycle(m), f"cycle({m})")
    return members


@dataclass
class CensusResult:
    max_vertices: int
    found: list[tuple[BipartiteGraph, str, Code]] = field(default_factory=list)
    unexpected: list[BipartiteGraph] = field(default_factory=list)
    missing: list[str] = field(default_factory=list)
    examined: int = 0

    def tags(self) -> list[str]:
        return [t for _, t, _ in self.found]

    def to_json(self) -> dict:
        def g(b):
            return {"partX": list(b.part_x), "partY": list(b.part_y),
                    "edges": [list(e) for e in sorted(b.edges)]}
        return {
            "maxVertices": self.max_vertices,
            "examined": self.examined,
            "found": [{"tag": t, "vertices": len(b), "graph": g(b)} for b, t, _ in self.found],
            "unexpected": [g(b) for b in self.unexpected],
            "missing": self.missing,
        }

    def to_csv(self) -> str:
        lines = ["vertices,partX,partY,edges,tag"]
        for b, t, _ in self.found:
            lines.append(f"{len(b)},{len(b.part_x)},{len(b.part_y)},{len(b.edges)},{t}")
        return "\n".join(lines) + "\n"


def _check(b: BipartiteGraph) -> bool:
    return check_bipartite_c_homogeneity(b).verdict == EXACT_TRUE


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("HOMODIGRAPH_THREADS", "1")))
    except ValueError:
        return 1


def census_c_homogeneous(n_max: int = DEFAULT_MAX, allow_large: bool = False) -> CensusResult:
    """Filter the exhaustive stream by the exact check and tag the survivors."""
    if n_max > DEFAULT_MAX and not allow_large:
        raise InputError(f"census above {DEFAULT_MAX} vertices needs allow_large=True")
    graphs = list(enumerate_connected_bipartite(n_max))
    workers = _threads()
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            verdicts = list(pool.map(_check, graphs, chunksize=16))
    else:
        verdicts = [_check(b) for b in graphs]
    expected = theorem_members(n_max)
    res = CensusResult(n_max, examined=len(graphs))
    seen = set()
    for b, ok in zip(graphs, verdicts):
        if not ok:
            continue
        code = canonical_code(b)
        seen.add(code)
        res.found.append((b, classify_bipartite_shape(b), code))
        if code not in expected:
            res.unexpected.append(b)
    res.missing = sorted(name for code, name in expected.items() if code not in seen)
    return res
