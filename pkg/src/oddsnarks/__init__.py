"""Construction and verification of odd 2-factored snarks."""

from .coloring import EdgeColoring, find_3_edge_coloring, is_snark, verify_parity_lemma
from .connectivity import (
    CyclicConnectivity,
    SnarkReport,
    bridges,
    cyclic_edge_connectivity,
    girth,
    verify_cut_cycle_parity,
)
from .construction import (
    BoldReport,
    ConstructionError,
    DotProductSpec,
    FourCut,
    GadgetReport,
    TheoremViolation,
    blanusa,
    bold_edges,
    bold_gadget_dot_product,
    dot_product,
    four_cut_case_audit,
    gadget_pairs,
    is_bold_edge,
    is_gadget_pair,
)
from .factors import (
    FactorConstraint,
    TwoFactor,
    classify_two_factor_behavior,
    enumerate_perfect_matchings,
    enumerate_two_factors,
    is_odd_two_factored,
)
from .generators import CATALOG, flower, named, petersen, petersen_H
from .graph import EdgeCut, Graph, GraphError, build_graph, delete_edges, delete_vertices
from .graph6 import emit_graph6, parse_graph6
from .kernels import BACKEND
from .recipes import build_recipe
from .symmetry import (
    OrbitPartition,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    edge_orbits,
    vertex_orbits,
)

__version__ = "0.1.0"
