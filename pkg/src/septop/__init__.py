"""Finite topologies, their separation graphs, and the constructions that characterize them."""

from .errors import SeptopError
from .graph import Graph, Hypergraph, line_graph
from .poset import Poset
from .separation import AXIOMS, Axiom, adjacent, graph, graph_chain, separated
from .topology import (
    FiniteTopology,
    discrete,
    from_minimal_base,
    from_open_sets,
    indiscrete,
    open_sets,
)

__all__ = [
    "AXIOMS",
    "Axiom",
    "FiniteTopology",
    "Graph",
    "Hypergraph",
    "Poset",
    "SeptopError",
    "adjacent",
    "discrete",
    "from_minimal_base",
    "from_open_sets",
    "graph",
    "graph_chain",
    "indiscrete",
    "line_graph",
    "open_sets",
    "separated",
]

__version__ = "0.1.0"
