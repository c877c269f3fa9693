"""Sums of the largest (signless) Laplacian eigenvalues of graphs.

A numpy-backed library with an exact-arithmetic core: graph families and
graph6 I/O, compound and additive compound matrices, integer characteristic
polynomials with Sturm root isolation, isomorphism-free enumeration of small
graphs, certified extremal searches, and verification suites.
"""

from .exact import (
    IntPoly,
    RationalInterval,
    certify_f,
    certify_s2,
    charpoly_exact,
    isolate_top_roots,
    sturm_count,
)
from .graphs import (
    ComponentPartition,
    Graph,
    components,
    cycle_space_dim,
    family_double_star,
    family_G,
    family_star_plus,
    from_edge_list,
    graph6_decode,
    graph6_encode,
    is_connected,
    is_tree,
)
from .linalg import (
    KSubsetIndex,
    SymMatrix,
    additive_compound,
    compound,
    eig_sym,
    ksubsets_lex,
    numeric_derivative_compound,
)
from .search import (
    EnumSpec,
    SearchReport,
    canonical_form,
    enumerate_graphs,
    laplacian_equality_class,
    max_s2_by_cycle_dim,
    min_f_by_edges,
    min_f_by_vertices,
)
from .spectral import MatrixKind, f_value, matrix_of, q_a_pi, quotient_matrix, s_k
from .verify import VerificationReport, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "ComponentPartition",
    "EnumSpec",
    "Graph",
    "IntPoly",
    "KSubsetIndex",
    "MatrixKind",
    "RationalInterval",
    "SearchReport",
    "SymMatrix",
    "VerificationReport",
    "additive_compound",
    "canonical_form",
    "certify_f",
    "certify_s2",
    "charpoly_exact",
    "components",
    "compound",
    "cycle_space_dim",
    "eig_sym",
    "enumerate_graphs",
    "f_value",
    "family_G",
    "family_double_star",
    "family_star_plus",
    "from_edge_list",
    "graph6_decode",
    "graph6_encode",
    "is_connected",
    "is_tree",
    "isolate_top_roots",
    "ksubsets_lex",
    "laplacian_equality_class",
    "matrix_of",
    "max_s2_by_cycle_dim",
    "min_f_by_edges",
    "min_f_by_vertices",
    "numeric_derivative_compound",
    "q_a_pi",
    "quotient_matrix",
    "run_all",
    "run_suite",
    "s_k",
    "sturm_count",
]
