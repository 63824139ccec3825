"""GI-graphs: graphs on Z_t x Z_n with complete-graph spokes and circulant
layers, generalizing the Petersen and I-graph families.

Construction, canonical forms, explicit automorphism generators, closed-form
group orders, vertex/edge-transitivity and Cayley classification, planar
layouts, and a brute-force oracle that cross-validates all of it.
"""

from .autgroup import (AutOrderReport, EXCEPTIONAL_ORDERS, GeneratorSet,
                       aut_order, cycle_swap, generators, layer_swap,
                       multiplier, multiset_stabilizer, reflection, rotation,
                       set_stabilizer)
from .canon import CanonicalForm, canonical_form, equivalent, standard_form
from .classify import (CAYLEY_NO, CAYLEY_UNKNOWN, CAYLEY_YES,
                       ClassificationReport, VTDecomposition, classify,
                       is_cayley, is_edge_transitive, is_vertex_transitive,
                       vt_decomposition)
from .graphs import (Edge, GIGraph, GISpec, build, components, is_connected,
                     layer_cycle_structure, recover_partition, validate_spec)
from .layout import (Layout, concentric_layout, edge_length_stats, svg,
                     unit_distance_layout_713)
from .oracle import (PermGroup, brute_aut, edge_orbits, find_isomorphism,
                     find_regular_subgroup, girth_and_c4, is_isomorphic,
                     vertex_orbits)
from .perms import Perm, compose, cycle_notation, group_closure, identity, inverse

__version__ = "0.1.0"

__all__ = [
    "AutOrderReport", "CanonicalForm", "CAYLEY_NO", "CAYLEY_UNKNOWN",
    "CAYLEY_YES", "ClassificationReport", "Edge", "EXCEPTIONAL_ORDERS",
    "GeneratorSet", "GIGraph", "GISpec", "Layout", "Perm", "PermGroup",
    "VTDecomposition", "aut_order", "brute_aut", "build", "canonical_form",
    "classify", "components", "compose", "concentric_layout", "cycle_notation",
    "cycle_swap", "edge_length_stats", "edge_orbits", "equivalent",
    "find_isomorphism", "find_regular_subgroup", "generators", "girth_and_c4",
    "group_closure", "identity", "inverse", "is_cayley", "is_connected",
    "is_edge_transitive", "is_isomorphic", "is_vertex_transitive",
    "layer_cycle_structure", "layer_swap", "multiplier", "multiset_stabilizer",
    "recover_partition", "reflection", "rotation", "set_stabilizer",
    "standard_form", "svg", "unit_distance_layout_713", "validate_spec",
    "vertex_orbits", "vt_decomposition",
]
