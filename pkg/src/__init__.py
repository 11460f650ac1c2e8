"""
metricdim package initialization.
Exposes version information and main package components.
"""
from .__version__ import __version__, __author__, __author_email__, __description__, __url__

# Import main components to make them available at the package level
from .config import Config
from .graph import Graph, SimpleGraph, build_graph, build_simple_graph
from .catalog import catalog_graph
from .edgelist import read_edge_list, write_edge_list
from .resolvability import brute_force_edim, brute_force_dim, is_edge_metric_generator
from .solver import build_edge_instance, solve_hitting_set, edim_via_ilp, export_lp
from .products import (
    RootedSubset,
    hierarchical_product,
    corona_product,
    bridge_cycle,
    edim_GU,
    edim_plus_GU,
)
