"""Minimum decompositions of complete multipartite graphs with even parts into
planar subgraphs of girth at least 4, with independent verification."""

from .bounds import (
    multipartite_arboricity,
    nash_williams_exact,
    planar_girth_edge_bound,
    theta4_lower_bound,
)
from .bowtie import (
    BowtieMap,
    RotationSystem,
    bowtie_product,
    forest_bowtie_embedding,
    tree_bowtie_embedding,
)
from .decomposer import Decomposition, decompose_even_multipartite, theta4_formula
from .forests import ForestDecomposition, arboricity_with_witness, decompose_into_forests
from .graph_core import (
    INFINITY,
    Graph,
    MultipartiteSpec,
    VertexPartition,
    complete_multipartite,
    girth,
    induced_subgraph,
    is_bipartite,
)
from .oracle import EXCEEDED, brute_force_is_planar, exact_girth_thickness
from .verify import audit_decomposition, is_planar, validate_embedding

__all__ = [
    "EXCEEDED",
    "INFINITY",
    "BowtieMap",
    "Decomposition",
    "ForestDecomposition",
    "Graph",
    "MultipartiteSpec",
    "RotationSystem",
    "VertexPartition",
    "arboricity_with_witness",
    "audit_decomposition",
    "bowtie_product",
    "brute_force_is_planar",
    "complete_multipartite",
    "decompose_even_multipartite",
    "decompose_into_forests",
    "exact_girth_thickness",
    "forest_bowtie_embedding",
    "girth",
    "induced_subgraph",
    "is_bipartite",
    "is_planar",
    "multipartite_arboricity",
    "nash_williams_exact",
    "planar_girth_edge_bound",
    "theta4_formula",
    "theta4_lower_bound",
    "tree_bowtie_embedding",
    "validate_embedding",
]
