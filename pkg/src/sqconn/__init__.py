"""Edge connectivity of graph squares: exact connectivity algorithms,
extremal constructions and theorem verification suites."""

from .connectivity import (
    Cut,
    CutAnalysis,
    analyze_cut,
    disjoint_paths,
    edge_connectivity,
    is_maximally_edge_connected,
    vertex_connectivity,
)
from .graph import Graph, GraphError, build_graph, min_degree
from .power import distance, graph_power, square

__version__ = "0.1.0"
