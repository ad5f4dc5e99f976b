"""Finite-ball experiments on highly arc-transitive and C-homogeneous digraphs.

The infinite digraphs are represented by finite balls whose interior
vertices carry complete neighbourhoods.  Positive checks are reported as
verified at scale; refutations carry a witness that can be re-checked.
"""
from __future__ import annotations

from .digraph import BipartiteGraph, Digraph, FiniteBall, MixedGraph
from .errors import ContractError, HomodigraphError, InputError, SpecParseError
from .families import LabeledBall, build, parse_spec

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph", "Digraph", "FiniteBall", "MixedGraph",
    "ContractError", "HomodigraphError", "InputError", "SpecParseError",
    "LabeledBall", "build", "parse_spec", "__version__",
]
