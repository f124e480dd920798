"""Recognition and coloring of perfectly colorable graphs.

A proper coloring is perfect when every connected induced subgraph uses
exactly as many colors as its clique number. The graphs admitting one are
exactly the perfect paw-free graphs, whose components are each bipartite or
complete multipartite; both are recognized and colored in linear time.
"""

from .coloring import Coloring, component_color_counts, perfect_coloring, verify_proper
from .generators import generate, parse_spec
from .graph import (
    ComponentLabeling,
    Graph,
    GraphError,
    ParseError,
    build_graph,
    connected_components,
    induced_subgraph,
    parse_graph,
)
from .recognition import (
    Bipartite,
    CompleteMultipartite,
    InducedPaw,
    Neither,
    OddHole,
    RecognitionReport,
    check_bipartite,
    check_complete_multipartite,
    classify_component,
    extract_certificate,
    recognize,
)

__all__ = [
    "Bipartite",
    "Coloring",
    "CompleteMultipartite",
    "ComponentLabeling",
    "Graph",
    "GraphError",
    "InducedPaw",
    "Neither",
    "OddHole",
    "ParseError",
    "RecognitionReport",
    "build_graph",
    "check_bipartite",
    "check_complete_multipartite",
    "classify_component",
    "component_color_counts",
    "connected_components",
    "extract_certificate",
    "generate",
    "induced_subgraph",
    "parse_graph",
    "parse_spec",
    "perfect_coloring",
    "recognize",
    "verify_proper",
]

__version__ = "0.1.0"
