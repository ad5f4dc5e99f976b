"""Constructors for finite pieces of the digraph families."""
from __future__ import annotations

from .base import LabeledBall, finite_ball, implicit_ball
from .bipartite import complete, cp, cycle, is_edge_transitive, make_bipartite, tree_fragment
from .cayley import make_cayley_free_product_ball, make_t_ball
from .dl import make_dl_ball
from .jt import make_j_segment
from .mgraph import StarExpansion, make_m_ball, star_expand
from .operators import contract_matching, directed_k2, line_ball, line_digraph, tensor_product
from .spec import FamilySpec, build, parse_spec
from .trees import make_directed_cycle, make_directed_tree_ball
from .yn import make_y_ball

__all__ = [
    "LabeledBall", "finite_ball", "implicit_ball", "complete", "cp", "cycle",
    "is_edge_transitive", "make_bipartite", "tree_fragment",
    "make_cayley_free_product_ball", "make_t_ball", "make_dl_ball", "make_j_segment",
    "StarExpansion", "make_m_ball", "star_expand", "contract_matching", "directed_k2",
    "line_ball", "line_digraph", "tensor_product", "FamilySpec", "build", "parse_spec",
    "make_directed_cycle", "make_directed_tree_ball", "make_y_ball",
]
