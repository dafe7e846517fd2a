"""Simple permutoassociahedra: exact combinatorics, geometry and exports.

The package builds the family PA_n of simple polytopes whose vertices are
the completely bracketed permuted products of the labels 0..n.  The
combinatorial side (chains, nested sets, bracketings, the rewrite graph)
lives in :mod:`simplepa.nestedsets` and :mod:`simplepa.brackets`; the exact
rational halfspace realization and its verification in
:mod:`simplepa.geometry`; the coherence-diagram classification of 1- and
2-faces in :mod:`simplepa.classify`; serialization and the ``pa`` command in
:mod:`simplepa.cli`.
"""

from .brackets import (
    ALPHA,
    SIGMA,
    BracketSyntaxError,
    Bracketing,
    RewriteGraph,
    all_bracketings,
    alpha_neighbors,
    build_graph,
    chain_incident,
    from_nested,
    ordered_partition,
    parse_bracketing,
    print_bracketing,
    sigma_neighbor,
    to_nested,
)
from .classify import (
    DiagramCensus,
    DiagramType,
    EdgeKind,
    boundary_cycle,
    classify_1_face,
    classify_2_face,
    diagram_census,
)
from .geometry import (
    AffineMap,
    Hyperplane,
    SingularSystemError,
    VertexReport,
    affine_dimension,
    ambient_plane,
    f_vector,
    facet_inequality,
    facet_rhs,
    fractional_offset,
    h_representation,
    normalization_map,
    normalized_functional,
    polytope_graph,
    realization_report,
    solve_exact,
    standard_chain_interval,
    top_simplex_points,
    vertex_coordinates,
    verify_vertex,
)
from .limits import DEFAULT_MAX_N, ResourceCapError
from .nestedsets import (
    Chain,
    NestedSet,
    comparable,
    enumerate_chains,
    enumerate_vertices,
    faces,
    faces_via_cliques,
    is_full_chain,
    is_nested,
    is_nested_oracle,
    nested_key,
    superficial_count,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "SIGMA",
    "AffineMap",
    "BracketSyntaxError",
    "Bracketing",
    "Chain",
    "DEFAULT_MAX_N",
    "DiagramCensus",
    "DiagramType",
    "EdgeKind",
    "Hyperplane",
    "NestedSet",
    "ResourceCapError",
    "RewriteGraph",
    "SingularSystemError",
    "VertexReport",
    "affine_dimension",
    "all_bracketings",
    "alpha_neighbors",
    "ambient_plane",
    "boundary_cycle",
    "build_graph",
    "chain_incident",
    "classify_1_face",
    "classify_2_face",
    "comparable",
    "diagram_census",
    "enumerate_chains",
    "enumerate_vertices",
    "f_vector",
    "faces",
    "faces_via_cliques",
    "facet_inequality",
    "facet_rhs",
    "fractional_offset",
    "from_nested",
    "h_representation",
    "is_full_chain",
    "is_nested",
    "is_nested_oracle",
    "nested_key",
    "normalization_map",
    "normalized_functional",
    "ordered_partition",
    "parse_bracketing",
    "polytope_graph",
    "print_bracketing",
    "realization_report",
    "sigma_neighbor",
    "solve_exact",
    "standard_chain_interval",
    "superficial_count",
    "to_nested",
    "top_simplex_points",
    "vertex_coordinates",
    "verify_vertex",
]
