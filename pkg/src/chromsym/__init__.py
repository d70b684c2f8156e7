"""Chromatic symmetric functions in the e-basis via forest triples."""

from .algebra import ESym, compositions_of, sort_to_partition, split_first, split_last
from .errors import ResourceLimitError
from .foresttriples import (
    ForestTriple,
    TreeTriple,
    csf_forest_triples,
    csf_i,
    csf_i_all,
    enumerate_forest_triples,
)
from .graph import (
    LabeledGraph,
    chain_graph,
    clique_graph,
    cycle_graph,
    enumerate_nbc_forests,
    graph_sum,
    path_graph,
    star_graph,
    tree_graph,
)

__version__ = "0.1.0"

__all__ = [
    "ESym",
    "ForestTriple",
    "LabeledGraph",
    "ResourceLimitError",
    "TreeTriple",
    "chain_graph",
    "clique_graph",
    "compositions_of",
    "csf_forest_triples",
    "csf_i",
    "csf_i_all",
    "cycle_graph",
    "enumerate_forest_triples",
    "enumerate_nbc_forests",
    "graph_sum",
    "path_graph",
    "sort_to_partition",
    "split_first",
    "split_last",
    "star_graph",
    "tree_graph",
]
