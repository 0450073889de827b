"""Spectral and distance-based topological indices for small chemical
graphs: computation, family enumeration, alkane name parsing, and
reproduction of the bundled reference tables."""

__version__ = "0.1.0"

from .analysis import (
    IndexReport,
    Ranking,
    Regression,
    correlate,
    cospectral_pairs,
    detect_degeneracy,
    format_report,
    index_report,
    rank_by,
    regress,
    regress_ron,
    reproduce_tables,
)
from .enumeration import enumerate_alkane_trees, enumerate_cyclic_chemical_graphs
from .graphs import (
    Graph,
    GraphError,
    canonical_key,
    complete_graph,
    cycle_graph,
    format_edge_list,
    parse_edge_list,
    path_graph,
    star_graph,
)
from .indices import (
    balaban_j,
    centrality_rms,
    centrality_weighted_mean,
    estrada_mean,
    index_values,
    subgraph_centralities,
    subgraph_centrality_series,
)
from .nomenclature import ParseError, graph_from_name, parse_name
from .output import emit_csv, emit_svg_scatter
from .spectral import (
    SpectralDecomposition,
    SpectralError,
    characteristic_polynomial,
    decompose,
)

__all__ = [
    "__version__",
    "Graph",
    "GraphError",
    "IndexReport",
    "ParseError",
    "Ranking",
    "Regression",
    "SpectralDecomposition",
    "SpectralError",
    "balaban_j",
    "canonical_key",
    "centrality_rms",
    "centrality_weighted_mean",
    "characteristic_polynomial",
    "complete_graph",
    "correlate",
    "cospectral_pairs",
    "cycle_graph",
    "decompose",
    "detect_degeneracy",
    "emit_csv",
    "emit_svg_scatter",
    "enumerate_alkane_trees",
    "enumerate_cyclic_chemical_graphs",
    "estrada_mean",
    "format_edge_list",
    "format_report",
    "graph_from_name",
    "index_report",
    "index_values",
    "parse_edge_list",
    "parse_name",
    "path_graph",
    "rank_by",
    "regress",
    "regress_ron",
    "reproduce_tables",
    "star_graph",
    "subgraph_centralities",
    "subgraph_centrality_series",
]
