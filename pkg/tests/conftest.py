from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st

from homodigraph.digraph import Digraph


def d3() -> Digraph:
    return Digraph([0, 1, 2], [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def triangle() -> Digraph:
    return d3()


@st.composite
def digraphs(draw, max_vertices: int = 7, min_vertices: int = 0) -> Digraph:
    """Random digraph: each unordered pair is absent, forward or backward."""
    n = draw(st.integers(min_vertices, max_vertices))
    arcs = []
    for u, v in itertools.combinations(range(n), 2):
        c = draw(st.integers(0, 2))
        if c == 1:
            arcs.append((u, v))
        elif c == 2:
            arcs.append((v, u))
    return Digraph(range(n), arcs)


def brute_isos(g1: Digraph, g2: Digraph) -> list[dict[int, int]]:
    """All isomorphisms by trying every bijection."""
    if len(g1) != len(g2) or len(g1.arcs) != len(g2.arcs):
        return []
    v1, v2 = list(g1.vertices), list(g2.vertices)
    out = []
    for perm in itertools.permutations(v2):
        phi = dict(zip(v1, perm))
        if all((phi[u], phi[w]) in g2.arcs for u, w in g1.arcs):
            out.append(phi)
    return out
