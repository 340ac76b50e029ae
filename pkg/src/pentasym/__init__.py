"""pentasym: hyperbolic 4-manifolds with prescribed symmetry groups.

Triangulations by facet pairings of 4-simplices, graph-based rigidity
constructions realizing any finite group as the full isometry group of a
closed orientable hyperbolic 4-manifold, cusp monodromy analysis, and the
exact volume and lattice computations that support them.

Both triangulations and graphs have an isomorphism predicate; the
graph-level one is exported here as :func:`are_isomorphic`, the
triangulation-level one lives in :mod:`pentasym.triangulation`.
"""

from .errors import PentasymError, CapExceededError, ParseError
from .groups import (
    GROUP_ORDER_CAP,
    FiniteGroup,
    cayley_graph,
    cyclic_group,
    generator_count_bound,
    group_from_permutations,
    group_from_table,
    klein_four_group,
    load_group_json,
    symmetric_group_3,
)
from .graphs import (
    MODE_PERMUTE,
    MODE_PRESERVE,
    VERTEX_CAP,
    AutomorphismGroup,
    GraphAutomorphism,
    GraphTooLargeError,
    LabeledDigraph,
    are_isomorphic,
    automorphisms,
    blow_up,
    boundary_graph,
    cubic_graphs,
    delete_edge,
    is_asymmetric,
    isomorphisms,
    k6_glueing_graph,
    klein_graph,
    make_undirected,
    related_classes,
    strip_labels,
)
from .triangulation import (
    AUT_SIMPLEX_CAP,
    OrientationAssignment,
    NonOrientableWitness,
    Pairing,
    TriAutGroup,
    TriAutomorphism,
    Triangulation,
    action_is_free,
    automorphism_group,
    double_of_simplex,
    edge_complex,
    edge_complex_chain,
    graph_complex,
    isomorphisms_between,
    make_pairing,
    one_cusped_triangulation,
    orientability,
    orientation_preserving_subgroup,
    pairing_parity,
    pairing_sign,
    realize_group,
    realize_group_census,
    vertex_subcomplex,
)
from .cusps import (
    MAPPING_CLASSES,
    CuspDescriptor,
    FaceCycle,
    cusp_descriptors,
    cycle_notation,
    face_cycles,
    monodromy,
    monodromy_parts,
    permutation_parity,
    return_map,
)
from .volumes import (
    BLOCK_QUOTIENT_STRATA,
    IDEAL_TETRAHEDRON_VOLUME,
    TWENTYFOUR_CELL_VOLUME,
    ExactVolume,
    Stratum,
    StratumTable,
    block_to_tetrahedra_ratio,
    block_volume,
    manifold_volume,
    max_section_volume,
    rectified_simplex_volume,
    twelve_tetrahedra,
    volume_bound,
)
from .lattice import (
    LatticeVector,
    QuadForm3,
    RigidityVerdict,
    Sqrt3Number,
    basis_vectors,
    condition_filter,
    gram_from_vectors,
    is_translation_case,
    q_matrix,
    rigidity_case,
    search_radius,
    short_vectors,
)

__all__ = [
    "PentasymError", "CapExceededError", "ParseError",
    "GROUP_ORDER_CAP", "FiniteGroup", "cayley_graph", "cyclic_group",
    "generator_count_bound", "group_from_permutations", "group_from_table",
    "klein_four_group", "load_group_json", "symmetric_group_3",
    "MODE_PERMUTE", "MODE_PRESERVE", "VERTEX_CAP", "AutomorphismGroup",
    "GraphAutomorphism", "GraphTooLargeError", "LabeledDigraph",
    "are_isomorphic", "automorphisms", "blow_up", "boundary_graph",
    "cubic_graphs", "delete_edge", "is_asymmetric", "isomorphisms",
    "k6_glueing_graph", "klein_graph", "make_undirected", "related_classes",
    "strip_labels",
    "AUT_SIMPLEX_CAP", "OrientationAssignment", "NonOrientableWitness",
    "Pairing", "TriAutGroup", "TriAutomorphism", "Triangulation",
    "action_is_free", "automorphism_group", "double_of_simplex",
    "edge_complex", "edge_complex_chain", "graph_complex",
    "isomorphisms_between", "make_pairing", "one_cusped_triangulation",
    "orientability", "orientation_preserving_subgroup", "pairing_parity",
    "pairing_sign", "realize_group", "realize_group_census",
    "vertex_subcomplex",
    "MAPPING_CLASSES", "CuspDescriptor", "FaceCycle", "cusp_descriptors",
    "cycle_notation", "face_cycles", "monodromy", "monodromy_parts",
    "permutation_parity", "return_map",
    "BLOCK_QUOTIENT_STRATA", "IDEAL_TETRAHEDRON_VOLUME",
    "TWENTYFOUR_CELL_VOLUME", "ExactVolume", "Stratum", "StratumTable",
    "block_to_tetrahedra_ratio", "block_volume", "manifold_volume",
    "max_section_volume", "rectified_simplex_volume", "twelve_tetrahedra",
    "volume_bound",
    "LatticeVector", "QuadForm3", "RigidityVerdict", "Sqrt3Number",
    "basis_vectors", "condition_filter", "gram_from_vectors",
    "is_translation_case", "q_matrix", "rigidity_case", "search_radius",
    "short_vectors",
]

__version__ = "0.1.0"
