"""Sensitivity toolkit for boolean functions and graph properties.

Thin python surface over the C++ core: builtin property generators,
exact sensitivity / block sensitivity, isomorphism classes, minimal
graphs, bound verification sweeps, and verified witness extraction.
"""

from ._core import (
    PropertyFunction,
    analyze,
    are_isomorphic,
    block_sensitivity_at,
    builtin,
    builtin_names,
    canonical_form,
    check_structural_inequalities,
    complement,
    degree_truncation,
    edge_index,
    edge_unindex,
    extract_witness,
    from_class_set,
    is_graph_property,
    is_monotone,
    is_nontrivial,
    iso_classes,
    isolated_vertices,
    max_block_sensitivity,
    max_sensitivity,
    minimal_graphs,
    monotone_check,
    positive_min_degree,
    positive_min_tree_size,
    read_property_file,
    sensitivity_at,
    tree_truncation,
    verify_exhaustive,
    verify_sampled,
    write_truth_table,
)

__version__ = "0.1.0"

__all__ = [
    "PropertyFunction",
    "analyze",
    "are_isomorphic",
    "block_sensitivity_at",
    "builtin",
    "builtin_names",
    "canonical_form",
    "check_structural_inequalities",
    "complement",
    "degree_truncation",
    "edge_index",
    "edge_unindex",
    "extract_witness",
    "from_class_set",
    "is_graph_property",
    "is_monotone",
    "is_nontrivial",
    "iso_classes",
    "isolated_vertices",
    "max_block_sensitivity",
    "max_sensitivity",
    "minimal_graphs",
    "monotone_check",
    "positive_min_degree",
    "positive_min_tree_size",
    "read_property_file",
    "sensitivity_at",
    "tree_truncation",
    "verify_exhaustive",
    "verify_sampled",
    "write_truth_table",
]
